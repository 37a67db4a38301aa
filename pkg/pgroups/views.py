import logging

from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from .bounds import class3_bound_exponent, compute_report, green_exponent, niroomand_exponent, quotient_scan
from .catalog import parse_spec, build, render
from .exceptions import BoundDomainError, GroupComputationError, SpecParameterError
from .multiplier import oracle_multiplier, schur_multiplier
from .serializers import BoundsQuerySerializer, GroupReportSerializer, OracleSerializer, ScanSerializer
from .utils import http_status_for

logger = logging.getLogger(__name__)


def parse_public_spec(spec):
    """Parse a spec from a URL; PCP files are only read from the command line."""
    parsed = parse_spec(spec)
    if parsed.family == 'file' or any(f.family == 'file' for f in parsed.product):
        raise SpecParameterError('file: specs are not served over HTTP')
    return parsed


def error_response(exc):
    code = http_status_for(exc)
    if code >= 500:
        logger.exception('computation failed')
    return Response({'error': str(exc), 'type': type(exc).__name__}, status=code)


class GroupReportView(APIView):
    """
    GET /groups/<spec> - invariant report of a catalog group
    """

    def get(self, request, spec):
        """
        Returns:
            200: GroupReport in the stable JSON schema
            400: Unparseable spec or bad family parameters
            413: A computation cap was exceeded
            500: Computation error
        """
        try:
            parsed = parse_public_spec(spec)
            report = compute_report(build(parsed), render(parsed))
        except GroupComputationError as exc:
            return error_response(exc)
        return Response(GroupReportSerializer(report).data, status=status.HTTP_200_OK)


class QuotientScanView(APIView):
    """
    GET /groups/<spec>/scan - one record per central subgroup of order p
    """

    def get(self, request, spec):
        try:
            parsed = parse_public_spec(spec)
            scan = quotient_scan(build(parsed), render(parsed))
        except GroupComputationError as exc:
            return error_response(exc)
        return Response(ScanSerializer(scan).data, status=status.HTTP_200_OK)


class OracleView(APIView):
    """
    GET /groups/<spec>/oracle - H_2 from the bar resolution, compared with the tails method

    Returns:
        200: both computations and the match verdict
        413: group order above the oracle cap
    """

    def get(self, request, spec):
        try:
            parsed = parse_public_spec(spec)
            pres = build(parsed)
            h2 = oracle_multiplier(pres)
            tails = schur_multiplier(pres).multiplier
        except GroupComputationError as exc:
            return error_response(exc)
        data = {
            'spec': render(parsed),
            'order': pres.order,
            'h2': h2,
            'tails': tails,
            'match': h2 == tails,
        }
        return Response(OracleSerializer(data).data, status=status.HTTP_200_OK)


class BoundsView(APIView):
    """
    GET /bounds/<n>/<k> - Green, Niroomand and class-3 exponents
    """

    def get(self, request, n, k):
        try:
            green = green_exponent(n)
            niroomand = niroomand_exponent(n, k) if k >= 1 else None
            class3 = class3_bound_exponent(n, k) if k >= 1 else None
        except BoundDomainError as exc:
            return error_response(exc)
        data = {'n': n, 'k': k, 'green_exp': green, 'niroomand_exp': niroomand, 'class3_exp': class3}
        return Response(BoundsQuerySerializer(data).data, status=status.HTTP_200_OK)

from rest_framework import serializers

from .bounds import GroupReport, NecessaryConditions
from .intlinalg import AbelianInvariants


class InvariantsField(serializers.Field):
    """Abelian invariants as a list of cyclic orders, 0 standing for a copy of Z."""

    def to_representation(self, value):
        return value.as_list()

    def to_internal_value(self, data):
        if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
            raise serializers.ValidationError('Expected a list of integers')
        torsion = [x for x in data if x]
        try:
            return AbelianInvariants(tuple(torsion), len(data) - len(torsion))
        except ValueError as exc:
            raise serializers.ValidationError(str(exc))


class GroupProfileSerializer(serializers.Serializer):

    spec = serializers.CharField(allow_blank=True)
    p = serializers.IntegerField(min_value=2)
    n = serializers.IntegerField(min_value=0)
    k = serializers.IntegerField(min_value=0)
    d = serializers.IntegerField(min_value=0)

    def get_fields(self):
        # "class" is a keyword, so the field is added here
        fields = super().get_fields()
        ordered = {}
        for name, field in fields.items():
            if name == 'd':
                ordered['class'] = serializers.IntegerField(source='c', min_value=0)
            ordered[name] = field
        return ordered


class InvariantsSerializer(serializers.Serializer):

    gab = InvariantsField()
    center = InvariantsField()
    multiplier = InvariantsField()


class BoundsSerializer(serializers.Serializer):

    green_exp = serializers.IntegerField(min_value=0)
    niroomand_exp = serializers.IntegerField(allow_null=True)
    t = serializers.IntegerField()
    attains = serializers.BooleanField()
    free_rank_check = serializers.IntegerField(min_value=0)


class NecessaryConditionsSerializer(serializers.Serializer):

    i = serializers.BooleanField(source='gab_elementary')
    ii = serializers.BooleanField(source='center_elementary')
    iii = serializers.BooleanField(source='center_in_derived')
    exempt_g1 = serializers.BooleanField()


class GroupReportSerializer(serializers.Serializer):
    """
    Stable JSON form of a GroupReport; ``save()`` rebuilds the report, so
    serializing and reading back gives an equal object.
    """

    group = GroupProfileSerializer(source='*')
    invariants = InvariantsSerializer(source='*')
    bounds = BoundsSerializer(source='*')
    lemma31 = NecessaryConditionsSerializer(source='conditions', allow_null=True)
    checks = serializers.ListField(child=serializers.CharField(), source='alarms')

    def create(self, validated_data):
        conditions = validated_data.pop('conditions')
        alarms = validated_data.pop('alarms')
        return GroupReport(
            **validated_data,
            conditions=NecessaryConditions(**conditions) if conditions is not None else None,
            alarms=tuple(alarms),
        )


class QuotientRecordSerializer(serializers.Serializer):

    subgroup = serializers.CharField()
    quotient = GroupReportSerializer(source='report')
    jones = serializers.SerializerMethodField()
    attains = serializers.BooleanField(allow_null=True)
    maximal_class_ok = serializers.BooleanField(allow_null=True)

    def get_jones(self, obj):

        return {
            'lhs_exp': obj.jones_lhs,
            'rhs_exp': obj.jones_rhs,
            'holds': obj.jones_holds,
        }


class ScanSerializer(serializers.Serializer):

    group = GroupReportSerializer(source='report')
    maximal_class_ok = serializers.BooleanField(allow_null=True)
    quotients = QuotientRecordSerializer(source='records', many=True)


class OracleSerializer(serializers.Serializer):

    spec = serializers.CharField()
    order = serializers.IntegerField()
    h2 = InvariantsField()
    tails = InvariantsField(allow_null=True)
    match = serializers.BooleanField(allow_null=True)


class BoundsQuerySerializer(serializers.Serializer):

    n = serializers.IntegerField(min_value=0)
    k = serializers.IntegerField(min_value=0)
    green_exp = serializers.IntegerField()
    niroomand_exp = serializers.IntegerField(allow_null=True)
    class3_exp = serializers.IntegerField(allow_null=True)


class CheckSerializer(serializers.Serializer):

    id = serializers.CharField()
    anchor = serializers.CharField()
    inputs = serializers.DictField()
    expected = serializers.JSONField(allow_null=True)
    computed = serializers.JSONField(allow_null=True)
    verdict = serializers.ChoiceField(choices=['pass', 'fail', 'alarm'])


class VerificationReportSerializer(serializers.Serializer):

    version = serializers.CharField()
    primes = serializers.ListField(child=serializers.IntegerField())
    checks = CheckSerializer(many=True)
    summary = serializers.DictField(child=serializers.IntegerField())
    timing = serializers.SerializerMethodField()

    def get_timing(self, obj):

        return {
            'started': obj.started,
            'finished': obj.finished,
            'runtimes': {check.id: round(check.runtime, 6) for check in obj.checks},
        }

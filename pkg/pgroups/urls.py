from django.urls import path

from .views import BoundsView, GroupReportView, OracleView, QuotientScanView

urlpatterns = [
    # scan and oracle MUST come before the report view, whose spec
    # segment is a path and would swallow the suffix
    path('groups/<path:spec>/scan', QuotientScanView.as_view(), name='group_scan'),
    path('groups/<path:spec>/oracle', OracleView.as_view(), name='group_oracle'),
    path('groups/<path:spec>', GroupReportView.as_view(), name='group_report'),

    path('bounds/<int:n>/<int:k>', BoundsView.as_view(), name='bounds'),
]

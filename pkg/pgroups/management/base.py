from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from ..catalog import build, parse_spec, render
from ..exceptions import GroupComputationError
from ..utils import exit_code_for


class GroupCommand(BaseCommand):
    """
    Base for commands that take a group spec. Library errors become
    CommandErrors carrying the documented exit status.
    """

    requires_system_checks = []

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except GroupComputationError as exc:
            raise CommandError(f'{type(exc).__name__}: {exc}', returncode=exit_code_for(exc)) from exc

    def run(self, *args, **options):
        raise NotImplementedError

    def load_group(self, text):
        spec = parse_spec(text)
        return render(spec), build(spec)

    def write_json(self, data, target):
        """Write ``data`` with the DRF JSON renderer to a path, or stdout for ``-``."""
        payload = JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')
        if target == '-':
            self.stdout.write(payload)
        else:
            Path(target).write_text(payload + '\n', encoding='utf-8')
            self.stdout.write(f'wrote {target}')

from typing import Any

from django.core.management.base import BaseCommand, CommandError

from helpers.errors import NakayamaError

from .jobs import JobSpec, Mode, parse_ideal, parse_k, render


class JsonCommand(BaseCommand):
    """Writes one JSON document to stdout; toolkit errors become exit codes."""

    def handle(self, *args: Any, **options: Any):
        try:
            payload = self.run(**options)
        except NakayamaError as exc:
            raise CommandError(str(exc), returncode=exc.returncode) from exc
        self.stdout.write(render(payload))
        failure = self.failure(payload)
        if failure:
            raise CommandError(failure, returncode=1)

    def run(self, **options: Any) -> dict:
        raise NotImplementedError

    def failure(self, payload: dict) -> str | None:
        if payload.get("match") is False:
            return "formula and oracle disagree"
        return None


class JobCommand(JsonCommand):
    """A command that reads an ideal job file and optionally a --k flag."""

    needs_k = True
    modes = True

    def add_arguments(self, parser):
        parser.add_argument("job", type=str)
        parser.add_argument("--field", default=None, type=str)
        if self.needs_k:
            parser.add_argument("--k", default=None, type=str)
        if self.modes:
            parser.add_argument("--mode", default=Mode.FORMULA, choices=Mode.values)

    def load(self, options) -> JobSpec:
        job = parse_ideal(options["job"], field=options.get("field"))
        if self.needs_k:
            job.k = parse_k(options.get("k"), job.n)
        job.mode = options.get("mode") or Mode.FORMULA
        return job

from typing import Any

from helpers.errors import UsageError

from commando.base import JsonCommand
from commando.verification import run_verification


class Command(JsonCommand):
    help = "Sweep ideals and compare every closed formula with the chain-complex oracle."

    def add_arguments(self, parser):
        parser.add_argument("--exhaustive", default=None, type=str)
        parser.add_argument("--seed", default=0, type=int)
        parser.add_argument("--random", default=0, type=int)
        parser.add_argument("--field", default=None, type=str)
        parser.add_argument("--workers", default=None, type=int)

    def run(self, **options: Any) -> dict:
        # python manage.py verify --exhaustive n=2,tmax=2 --seed 0 --random 50
        if not options.get("exhaustive") and not options.get("random"):
            raise UsageError("nothing to verify, pass --exhaustive and/or --random")
        summary = run_verification(
            exhaustive=options.get("exhaustive"),
            seed=options.get("seed", 0),
            random=options.get("random", 0),
            field=options.get("field"),
            workers=options.get("workers"),
        )
        if summary.failed:
            self.stderr.write(self.style.ERROR(f"{summary.failed} of {summary.checked} checks failed"))
        else:
            self.stderr.write(self.style.SUCCESS(f"all {summary.checked} checks passed"))
        return summary.as_json()

    def failure(self, payload: dict) -> str | None:
        if payload["failed"]:
            return f"{payload['failed']} checks failed"
        return None

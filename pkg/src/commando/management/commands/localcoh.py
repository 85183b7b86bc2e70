from typing import Any

from formulas.utils import local_cohomology
from helpers import degrees
from helpers.errors import UsageError

from commando.base import JobCommand


class Command(JobCommand):
    help = "dim H^i_m(S/I)_z for a single degree z in Z^n."
    needs_k = False
    modes = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--i", required=True, type=int)
        parser.add_argument(
            "--z",
            required=True,
            type=str,
            help="degree as a comma list; write negative degrees as --z=-1,0,0",
        )

    def run(self, **options: Any) -> dict:
        job = self.load(options)
        z = degrees.parse_degree(options["z"])
        if len(z) != job.n:
            raise UsageError(f"--z {options['z']} does not have {job.n} coordinates")
        i = options["i"]
        return {
            "job": job.as_json(),
            "i": i,
            "z": list(z),
            "dim": local_cohomology(job.ideal, job.t, i, z, job.field),
        }

from typing import Any

from formulas.utils import cohomology_table_formula
from modreps.utils import nakayama_table

from commando.base import JobCommand
from commando.jobs import Mode


class Command(JobCommand):
    help = "Cohomology table of N^k_t(S/I) by formula, oracle or both."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--with-mult", action="store_true", default=False)

    def run(self, **options: Any) -> dict:
        # python manage.py cohomology job.json --k 1,1 --mode both
        job = self.load(options)
        with_mult = options.get("with_mult", False)
        payload = {"job": job.as_json()}
        if job.mode in (Mode.FORMULA, Mode.BOTH):
            formula = cohomology_table_formula(job.ideal, job.t, job.k, job.field, with_mult=with_mult)
            payload["formula"] = formula.as_json()
        if job.mode in (Mode.ORACLE, Mode.BOTH):
            oracle = nakayama_table(job.ideal, job.t, job.k, job.field, with_mult=with_mult)
            payload["oracle"] = oracle.as_json()
        if job.mode == Mode.BOTH:
            payload["match"] = formula == oracle
        return payload

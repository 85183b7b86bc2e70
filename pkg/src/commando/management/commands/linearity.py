from typing import Any

from formulas.linearity import is_c_linear, is_support_linear
from formulas.utils import betti_table_formula
from helpers import degrees
from helpers.errors import UsageError
from modreps.utils import betti_table

from commando.base import JobCommand
from commando.jobs import Mode


class Command(JobCommand):
    help = "c-linearity and support-linearity of the Betti table of N^k_t(S/I)."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--c", required=True, type=str)

    def run(self, **options: Any) -> dict:
        job = self.load(options)
        c = degrees.parse_degree(options["c"])
        if len(c) != job.n:
            raise UsageError(f"--c {options['c']} does not have {job.n} coordinates")
        tables = {}
        if job.mode in (Mode.FORMULA, Mode.BOTH):
            tables["formula"] = betti_table_formula(job.ideal, job.t, job.k, job.field)
        if job.mode in (Mode.ORACLE, Mode.BOTH):
            tables["oracle"] = betti_table(job.ideal, job.t, job.k, job.field)
        payload = {"job": job.as_json(), "c": list(c)}
        for name, table in tables.items():
            payload[name] = {
                "c_linear": is_c_linear(table, c, job.n),
                "support_linear": is_support_linear(table),
            }
        if job.mode == Mode.BOTH:
            payload["match"] = payload["formula"] == payload["oracle"]
        return payload

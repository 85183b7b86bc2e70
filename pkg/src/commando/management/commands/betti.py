from typing import Any

from formulas.utils import betti_table_formula
from modreps.utils import betti_table

from commando.base import JobCommand
from commando.jobs import Mode


def classical_rows(table):
    """β_{p,r} = B^{-p}_r, for k = 0."""
    return [{"p": -i, "r": list(r), "dim": d} for (i, r), d in sorted(table.dims.items(), key=lambda x: (-x[0][0], x[0][1]))]


class Command(JobCommand):
    help = "Betti spaces of N^k_t(S/I); with k = 0 these are the Betti numbers of S/I."

    def run(self, **options: Any) -> dict:
        job = self.load(options)
        payload = {"job": job.as_json()}
        tables = {}
        if job.mode in (Mode.FORMULA, Mode.BOTH):
            tables["formula"] = betti_table_formula(job.ideal, job.t, job.k, job.field)
        if job.mode in (Mode.ORACLE, Mode.BOTH):
            tables["oracle"] = betti_table(job.ideal, job.t, job.k, job.field)
        for name, table in tables.items():
            payload[name] = table.as_json()
            if not any(job.k):
                payload[name]["betti"] = classical_rows(table)
        if job.mode == Mode.BOTH:
            payload["match"] = tables["formula"] == tables["oracle"]
        return payload

from typing import Any

from formulas.vanishing import two_var_report
from modreps.utils import nakayama_table

from commando.base import JobCommand
from commando.jobs import Mode


class Command(JobCommand):
    help = "Two-variable vanishing report for N^k_t(S/I)."

    def run(self, **options: Any) -> dict:
        job = self.load(options)
        report = two_var_report(job.ideal, job.t, job.k)
        payload = {"job": job.as_json(), "report": report.as_json()}
        if job.mode in (Mode.ORACLE, Mode.BOTH):
            table = nakayama_table(job.ideal, job.t, job.k, job.field)
            payload["oracle"] = {"indices": table.indices()}
            payload["match"] = (
                all(report.vanishing()[i] == table.vanishes(i) for i in range(4))
                and report.single_nonvanishing == (len(table.indices()) <= 1)
            )
        return payload

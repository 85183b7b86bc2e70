from typing import Any

from formulas.vanishing import nonvanishing_witness, vanishing_h0, vanishing_top
from modreps.utils import nakayama_table

from commando.base import JobCommand
from commando.jobs import Mode


class Command(JobCommand):
    help = "Vanishing of H^0 and H^{2n-1} of N^k_t(S/I) from peaks and indents."

    def run(self, **options: Any) -> dict:
        job = self.load(options)
        top = 2 * job.n - 1
        payload = {
            "job": job.as_json(),
            "h0_vanishes": vanishing_h0(job.ideal, job.t, job.k),
            "top_vanishes": vanishing_top(job.ideal, job.t, job.k),
            "witnesses": [w.as_json() for w in nonvanishing_witness(job.ideal, job.t, job.k)],
        }
        if job.mode in (Mode.ORACLE, Mode.BOTH):
            table = nakayama_table(job.ideal, job.t, job.k, job.field)
            payload["oracle"] = {
                "h0_vanishes": table.vanishes(0),
                "top_vanishes": table.vanishes(top),
                "indices": table.indices(),
            }
            payload["match"] = (
                payload["h0_vanishes"] == table.vanishes(0)
                and payload["top_vanishes"] == table.vanishes(top)
                and all(not table.vanishes(w["i"]) for w in payload["witnesses"])
            )
        return payload

from typing import Any

from ideals.utils import alexander_dual
from modreps.utils import alexander_dual_module, module_table, quotient_module

from commando.base import JobCommand


class Command(JobCommand):
    help = "Alexander dual I^[t] of the ideal, optionally with the dual module of S/I."
    needs_k = False
    modes = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--module", action="store_true", default=False)

    def run(self, **options: Any) -> dict:
        job = self.load(options)
        dual = alexander_dual(job.ideal, job.t)
        payload = {"job": job.as_json(), "dual": dual.as_json(), "dual_ideal": str(dual)}
        if options.get("module"):
            module = alexander_dual_module(quotient_module(job.ideal, job.t, job.field))
            payload["module"] = module_table(module).rows()
        return payload

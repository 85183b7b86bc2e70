import io
import json
import pickle
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from commando.jobs import parse_ideal, parse_k, render, run_command
from commando.verification import (
    CheckResult,
    Summary,
    check_case,
    check_stability,
    parse_exhaustive,
    run_verification,
)
from helpers import degrees
from helpers.errors import ComplexTooLarge, NotTDeterminedError, ParseError, UsageError
from helpers.linalg import GF2, QQ
from ideals.utils import all_t_determined_ideals, minimalize, with_pure_powers, zero_ideal
from modreps.utils import nakayama_table


def job(n, t, generators, field=None):
    data = {"n": n, "t": list(t), "generators": [list(g) for g in generators]}
    if field is not None:
        data["field"] = field
    return data


class JobFileTestCase(SimpleTestCase):

    def test_parse_ideal(self):
        spec = parse_ideal(io.StringIO(json.dumps(job(2, (1, 1), [(1, 1)], {"type": "gfp", "p": 2}))))
        self.assertEqual(spec.ideal, minimalize([(1, 1)]))
        self.assertEqual(spec.t, (1, 1))
        self.assertEqual(spec.field, GF2)

    def test_field_override_and_default(self):
        source = json.dumps(job(2, (1, 1), [(1, 1)]))
        self.assertEqual(parse_ideal(io.StringIO(source)).field, GF2)
        self.assertEqual(parse_ideal(io.StringIO(source), field="q").field, QQ)

    def test_minimalization_warns(self):
        source = io.StringIO(json.dumps(job(2, (2, 1), [(1, 1), (2, 1)])))
        with self.assertLogs("commando.jobs", level="WARNING"):
            spec = parse_ideal(source)
        self.assertEqual(spec.ideal.as_json(), [[1, 1]])

    def test_not_t_determined(self):
        with self.assertRaises(NotTDeterminedError) as caught:
            parse_ideal(io.StringIO(json.dumps(job(2, (0, 0), [(1, 0)]))))
        self.assertEqual(caught.exception.returncode, 3)

    def test_malformed(self):
        for text in ["{not json", "[1, 2]", json.dumps({"n": 2}), json.dumps(job(3, (1, 1), []))]:
            with self.assertRaises(ParseError) as caught:
                parse_ideal(io.StringIO(text))
            self.assertEqual(caught.exception.returncode, 2)
        with self.assertRaises(ParseError):
            parse_ideal("/nonexistent/job.json")

    def test_parse_k(self):
        self.assertEqual(parse_k("1,2", 2), (1, 2))
        self.assertEqual(parse_k(None, 2, default=(0, 0)), (0, 0))
        with self.assertRaises(UsageError):
            parse_k(None, 2)
        with self.assertRaises(UsageError):
            parse_k("1,2,3", 2)
        with self.assertRaises(UsageError):
            parse_k("1,-1", 2)

    def test_render_is_sorted(self):
        self.assertEqual(render({"b": 1, "a": [2]}), '{"a": [2], "b": 1}')


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, data) -> str:
        path = Path(self.tmp.name) / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    def run_json(self, *argv):
        code, out = run_command(list(argv))
        return code, json.loads(out) if out else None

    def test_cohomology_both(self):
        path = self.write("xy.json", job(2, (1, 1), [(1, 1)]))
        code, payload = self.run_json("cohomology", path, "--k", "1,1", "--mode", "both")
        self.assertEqual(code, 0)
        self.assertTrue(payload["match"])
        self.assertEqual(payload["formula"]["rows"], [
            {"i": 1, "r": [0, 1], "dim": 1},
            {"i": 1, "r": [1, 0], "dim": 1},
            {"i": 1, "r": [1, 1], "dim": 1},
        ])

    def test_cohomology_with_mult(self):
        path = self.write("xy.json", job(2, (1, 1), [(1, 1)]))
        code, payload = self.run_json("cohomology", path, "--k", "1,1", "--mode", "both", "--with-mult")
        self.assertEqual(code, 0)
        self.assertTrue(payload["match"])
        self.assertIn({"i": 1, "r": [1, 1], "j": 1, "mult_rank": 1}, payload["formula"]["mult"])

    def test_output_is_deterministic(self):
        path = self.write("xyz.json", job(3, (1, 1, 1), [(1, 1, 0), (0, 1, 1)]))
        argv = ["cohomology", path, "--k", "1,1,1", "--mode", "both"]
        self.assertEqual(run_command(argv), run_command(argv))

    def test_missing_k(self):
        path = self.write("xy.json", job(2, (1, 1), [(1, 1)]))
        code, _ = run_command(["cohomology", path])
        self.assertEqual(code, 3)

    def test_parse_error_exit_code(self):
        path = Path(self.tmp.name) / "broken.json"
        path.write_text("{", encoding="utf-8")
        code, out = run_command(["cohomology", str(path), "--k", "1,1"])
        self.assertEqual(code, 2)
        self.assertEqual(out, "")

    def test_not_t_determined_exit_code(self):
        path = self.write("bad.json", job(2, (0, 0), [(1, 0)]))
        self.assertEqual(run_command(["dual", path])[0], 3)

    @override_settings(NAK_MAX_CELLS=3)
    def test_size_guard_exit_code(self):
        path = self.write("zero.json", job(2, (2, 2), []))
        code, _ = run_command(["cohomology", path, "--k", "1,1", "--mode", "oracle"])
        self.assertEqual(code, 4)

    def test_betti_classical_rows(self):
        path = self.write("xy.json", job(2, (1, 1), [(1, 1)]))
        code, payload = self.run_json("betti", path, "--k", "0,0", "--mode", "both")
        self.assertEqual(code, 0)
        self.assertTrue(payload["match"])
        self.assertEqual(payload["oracle"]["betti"], [
            {"p": 0, "r": [0, 0], "dim": 1},
            {"p": 1, "r": [1, 1], "dim": 1},
        ])

    def test_localcoh(self):
        path = self.write("xyz.json", job(3, (1, 1, 1), [(1, 1, 1)]))
        code, payload = self.run_json("localcoh", path, "--i", "2", "--z", "0,0,0")
        self.assertEqual(code, 0)
        self.assertEqual(payload["dim"], 1)
        code, _ = run_command(["localcoh", path, "--i", "2", "--z", "0,0"])
        self.assertEqual(code, 3)

    def test_localcoh_negative_degree(self):
        path = self.write("xy.json", job(2, (1, 1), [(1, 1)]))
        code, payload = self.run_json("localcoh", path, "--i", "1", "--z=0,-5")
        self.assertEqual(code, 0)
        self.assertEqual(payload["z"], [0, -5])
        self.assertEqual(payload["dim"], 1)

    def test_dual(self):
        path = self.write("xy.json", job(2, (1, 1), [(1, 1)]))
        code, payload = self.run_json("dual", path, "--module")
        self.assertEqual(code, 0)
        self.assertEqual(payload["dual"], [[0, 1], [1, 0]])
        self.assertEqual([row["r"] for row in payload["module"]], [[0, 1], [1, 0], [1, 1]])

    def test_vanishing(self):
        path = self.write("squares.json", job(2, (2, 2), [(2, 0), (0, 2)]))
        code, payload = self.run_json("vanishing", path, "--k", "1,1", "--mode", "both")
        self.assertEqual(code, 0)
        self.assertTrue(payload["match"])
        self.assertFalse(payload["h0_vanishes"])
        self.assertEqual(payload["witnesses"], [{"i": 0, "reason": "peak", "y": [1, 1]}])

    def test_twovar(self):
        path = self.write("xy.json", job(2, (1, 1), [(1, 1)]))
        code, payload = self.run_json("twovar", path, "--k", "1,1", "--mode", "both")
        self.assertEqual(code, 0)
        self.assertTrue(payload["match"])
        self.assertEqual(payload["report"]["case"], "c")
        three = self.write("xyz.json", job(3, (1, 1, 1), [(1, 1, 1)]))
        self.assertEqual(run_command(["twovar", three, "--k", "1,1,1"])[0], 3)

    def test_linearity(self):
        path = self.write("x2y2.json", job(2, (2, 2), [(2, 2)]))
        code, payload = self.run_json("linearity", path, "--k", "2,2", "--c", "1,1", "--mode", "both")
        self.assertEqual(code, 0)
        self.assertTrue(payload["match"])
        self.assertEqual(set(payload["formula"]), {"c_linear", "support_linear"})

    def test_verify_needs_a_sweep(self):
        self.assertEqual(run_command(["verify"])[0], 3)
        self.assertEqual(run_command(["verify", "--exhaustive", "n=2"])[0], 2)

    def test_verify_exhaustive_two_variables(self):
        code, payload = self.run_json("verify", "--exhaustive", "n=2,tmax=2")
        self.assertEqual(code, 0, payload["first_failure"])
        self.assertEqual(payload["failed"], 0)
        self.assertGreater(payload["checked"], 0)

    def test_verify_exhaustive_three_variables(self):
        code, payload = self.run_json("verify", "--exhaustive", "n=3,tmax=1", "--workers", "2")
        self.assertEqual(code, 0, payload["first_failure"])

    def test_verify_exhaustive_over_rationals(self):
        code, payload = self.run_json("verify", "--exhaustive", "n=2,tmax=1", "--field", "q")
        self.assertEqual(code, 0, payload["first_failure"])
        self.assertEqual(payload["failed"], 0)

    def test_verify_random(self):
        code, payload = self.run_json("verify", "--random", "50", "--seed", "3", "--field", "q")
        self.assertEqual(code, 0, payload["first_failure"])
        self.assertEqual(payload["checked"], run_verification(random=50, seed=3, field="q").checked)


class VerificationTestCase(SimpleTestCase):

    def test_parse_exhaustive(self):
        self.assertEqual(parse_exhaustive("n=3,tmax=1"), (3, 1))
        with self.assertRaises(ParseError):
            parse_exhaustive("n=3")

    def test_summary_keeps_first_failure(self):
        summary = Summary()
        summary.add(CheckResult("cohomology", (1,), True))
        summary.add(CheckResult("betti", (2,), False, {"i": 0}))
        summary.add(CheckResult("witnesses", (3,), False))
        self.assertEqual(summary.as_json(), {
            "checked": 3,
            "failed": 2,
            "first_failure": {"check": "betti", "case": "(2,)", "detail": {"i": 0}},
        })

    def test_single_case(self):
        results = check_case(minimalize([(1, 1)]), (1, 1), (1, 1), GF2)
        self.assertTrue(results)
        self.assertEqual([r.name for r in results if not r.ok], [])

    def test_stability_on_finite_length_quotients(self):
        t = (2, 1)
        for I in all_t_determined_ideals(t):
            closed = with_pure_powers(I, t)
            for k in degrees.Box.upto(t):
                for r in [(1, 1), (1, 0)]:
                    result = check_stability(closed, t, k, r, GF2)
                    self.assertTrue(result.ok, result.as_json())
        self.assertTrue(check_stability(with_pure_powers(zero_ideal(1), (2,)), (2,), (0,), (1,), QQ).ok)

    def test_stability_needs_finite_length(self):
        with self.assertRaises(UsageError):
            check_stability(minimalize([(1, 1)]), (1, 1), (0, 0), (1, 1), GF2)
        # support reaching the corner of the box: the wider box moves the interval end
        wide = nakayama_table(zero_ideal(1), (2,), (2,), GF2)
        pulled = nakayama_table(zero_ideal(1), (1,), (1,), GF2).reindexed(
            lambda d: degrees.q_vector((0,), (1,), d), (2,),
        )
        self.assertEqual(wide.degrees_at(1), [(1,)])
        self.assertEqual(pulled.degrees_at(1), [(0,), (1,)])

    def test_workers_do_not_change_the_summary(self):
        serial = run_verification(exhaustive="n=1,tmax=1", workers=1)
        pooled = run_verification(exhaustive="n=1,tmax=1", workers=2)
        self.assertEqual(serial.as_json(), pooled.as_json())
        self.assertEqual(serial.failed, 0)

    def test_size_error_survives_pickling(self):
        error = pickle.loads(pickle.dumps(ComplexTooLarge(10, 3)))
        self.assertEqual((error.cells, error.cap, error.returncode), (10, 3, 4))
        self.assertIn("10 cells", str(error))

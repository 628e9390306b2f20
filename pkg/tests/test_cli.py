import contextlib
import io
import json
import tempfile
import unittest
from pathlib import Path

from kiselman.cli import EXIT_FAILED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, main


def run_cli(*argv):
    """main()을 실행하고 (exit code, stdout, stderr)를 반환함."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestNormalizeAndSize(unittest.TestCase):
    def test_normalize_plain(self):
        self.assertEqual(run_cli("normalize", "-n", "2", "1,2,1")[:2], (EXIT_OK, "2,1\n"))
        self.assertEqual(run_cli("normalize", "-n", "3", "")[:2], (EXIT_OK, "\n"))
        self.assertEqual(run_cli("normalize", "-n", "3", "3,2,1,3")[:2], (EXIT_OK, "3,2,1\n"))

    def test_normalize_json(self):
        code, out, _ = run_cli("normalize", "-n", "2", "1,2,1", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["normal_form"], [2, 1])
        self.assertEqual(data["input"], [1, 2, 1])
        self.assertFalse(data["input_canonical"])

    def test_parse_errors_exit_2(self):
        code, out, err = run_cli("normalize", "-n", "3", "1,x")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("error:"))
        self.assertEqual(run_cli("normalize", "-n", "3", "4")[0], EXIT_USAGE)

    def test_size(self):
        self.assertEqual(run_cli("size", "-n", "1")[:2], (EXIT_OK, "2\nbound: 2\n"))
        self.assertEqual(run_cli("size", "-n", "2")[:2], (EXIT_OK, "5\nbound: 5\n"))
        self.assertEqual(run_cli("size", "-n", "3")[:2], (EXIT_OK, "18\nbound: 82\n"))

    def test_size_json(self):
        data = json.loads(run_cli("size", "-n", "3", "--format", "json")[1])
        self.assertEqual(data, {"n": 3, "size": 18, "bound": 82, "length_bound": 4})

    def test_resource_limit_exit_3(self):
        code, out, err = run_cli("size", "-n", "4", "--element-cap", "10")
        self.assertEqual(code, EXIT_RESOURCE)
        self.assertEqual(out, "")
        self.assertIn("element_cap", err)


class TestUsageErrors(unittest.TestCase):
    def test_missing_rank(self):
        self.assertEqual(run_cli("size")[0], EXIT_USAGE)

    def test_missing_command(self):
        self.assertEqual(run_cli()[0], EXIT_USAGE)

    def test_format_not_offered_by_command(self):
        code, _, err = run_cli("size", "-n", "2", "--format", "dot")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("--format", err)

    def test_bad_rank(self):
        self.assertEqual(run_cli("size", "-n", "0")[0], EXIT_USAGE)


class TestCheckCommand(unittest.TestCase):
    def test_json_report(self):
        code, out, _ = run_cli("check", "-n", "2", "--suite", "rewrite", "--preset", "quick")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertTrue(data["passed"])
        self.assertEqual((data["n"], data["suite"], data["seed"]), (2, "rewrite", 0))

    def test_plain_report(self):
        code, out, _ = run_cli("check", "-n", "1", "--suite", "algebra", "--format", "plain")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip().splitlines()[-1], "PASSED")

    def test_exit_code_constants(self):
        self.assertEqual((EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE), (0, 1, 2, 3))


class TestListingCommands(unittest.TestCase):
    def test_elements_plain(self):
        out = run_cli("elements", "-n", "2", "--format", "plain")[1]
        self.assertEqual(out.splitlines(), ["e", "1", "2", "1,2", "2,1"])

    def test_elements_json(self):
        data = json.loads(run_cli("elements", "-n", "2")[1])
        self.assertEqual(len(data), 5)
        self.assertEqual(data[4], {"index": 4, "word": [2, 1], "content": [1, 2], "idempotent": True})

    def test_table_csv(self):
        out = run_cli("table", "-n", "2")[1]
        lines = out.splitlines()
        self.assertEqual(lines[0], ",0,1,2,3,4")
        self.assertEqual(len(lines), 6)

    def test_idempotents(self):
        data = json.loads(run_cli("idempotents", "-n", "2", "--content", "1,2")[1])
        self.assertEqual(data, [{"content": [1, 2], "word": [2, 1]}])
        self.assertEqual(len(json.loads(run_cli("idempotents", "-n", "3")[1])), 8)

    def test_green(self):
        data = json.loads(run_cli("green", "-n", "2", "--relation", "J")[1])
        self.assertEqual(data["relations"][0]["classes"], 5)
        self.assertTrue(data["relations"][0]["trivial"])

    def test_nilpotent(self):
        data = json.loads(run_cli("nilpotent", "-n", "2", "--content", "1,2")[1])
        self.assertEqual(data[0]["class"], 2)
        self.assertEqual(data[0]["zero"], [2, 1])


class TestRepresentationAndAlgebraCommands(unittest.TestCase):
    def test_image_of_word(self):
        data = json.loads(run_cli("repr", "-n", "2", "--kind", "psi", "--word", "1")[1])
        self.assertEqual(data["matrix"]["entries"], [["1", "1"], ["0", "0"]])

        data = json.loads(run_cli("repr", "-n", "2", "--kind", "kappa-prime", "--word", "1")[1])
        self.assertEqual(data["matrix"]["entries"], [["1", "2"], ["0", "0"]])

        data = json.loads(run_cli("repr", "-n", "2", "--kind", "kappa", "--word", "1")[1])
        self.assertEqual(data["matrix"]["entries"][0][1], [{"coeff": "1", "monomial": {"1,2": 1}}])

    def test_faithfulness(self):
        data = json.loads(run_cli("repr", "-n", "3")[1])
        self.assertTrue(data["faithful"])
        self.assertIsNone(data["witness"])

        data = json.loads(run_cli("repr", "-n", "4", "--kind", "psi")[1])
        self.assertFalse(data["faithful"])
        self.assertEqual(len(data["witness"]), 2)

    def test_algebra_idempotents(self):
        data = json.loads(run_cli("algebra-idempotents", "-n", "1")[1])
        self.assertEqual(
            data,
            [
                {"content": [], "element": [{"word": [], "coeff": "1/1"}, {"word": [1], "coeff": "-1/1"}]},
                {"content": [1], "element": [{"word": [1], "coeff": "1/1"}]},
            ],
        )

    def test_corner_dims(self):
        data = json.loads(run_cli("corner-dims", "-n", "2")[1])
        self.assertEqual(data["corners"]["e-a_n,a_n"], 1)
        self.assertEqual(data["previous_size"], 2)


class TestCayleyGraphExport(unittest.TestCase):
    def test_dot_to_stdout(self):
        code, out, _ = run_cli("export-cayley-graph", "-n", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("digraph K2 {"))

    def test_dot_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "graphs" / "k2.gv"
            code, out, _ = run_cli(
                "export-cayley-graph", "-n", "2", "--skip-loops", "--out", str(target)
            )
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(out, "")
            text = target.read_text(encoding="utf-8")
            self.assertEqual(text.count("->"), 5)


if __name__ == "__main__":
    unittest.main()

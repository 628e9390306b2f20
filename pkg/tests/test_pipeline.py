import unittest

from kiselman import run_pipeline
from kiselman.algebra import AlgebraPipeline
from kiselman.core.report import FAIL, PASS, SKIPPED, CheckReport
from kiselman.pipeline import RewriteSuite
from kiselman.representations import RepresentationPipeline
from kiselman.semigroup import StructurePipeline, enumerate_semigroup


def statuses(report):
    return {r.name: r.status for r in report.results}


class TestCheckReport(unittest.TestCase):
    def test_report_shape(self):
        report = CheckReport(2, "demo", seed=4)
        report.add("ok", True, "fine")
        report.skip("later", "too big")
        self.assertTrue(report.passed)
        report.add("broken", False, counterexamples=list(range(20)))
        self.assertFalse(report.passed)
        self.assertEqual([r.name for r in report.failures()], ["broken"])

        data = report.to_dict()
        self.assertEqual(
            (data["n"], data["suite"], data["seed"], data["passed"]), (2, "demo", 4, False)
        )
        self.assertEqual([c["status"] for c in data["checks"]], [PASS, SKIPPED, FAIL])
        self.assertEqual(len(data["checks"][2]["counterexamples"]), 10)

    def test_get(self):
        report = CheckReport(1, "demo")
        report.add("x", True)
        self.assertEqual(report.get("x").status, PASS)
        with self.assertRaises(KeyError):
            report.get("y")


class TestMasterPipeline(unittest.TestCase):
    def test_all_suites_pass_on_small_ranks(self):
        for n in (1, 2, 3):
            report = run_pipeline(n, "all", seed=0)
            self.assertTrue(
                report.passed,
                f"K_{n} 검증 실패: {[r.name for r in report.failures()]}"
            )

    def test_algebra_suite_on_k1(self):
        self.assertTrue(run_pipeline(1, "algebra", seed=0).passed)

    def test_representation_suite_on_k4(self):
        report = run_pipeline(4, "repr", seed=0)
        self.assertTrue(report.passed)
        s = statuses(report)
        self.assertEqual(s["psi_faithfulness"], PASS)
        self.assertEqual(s["psi_known_witness"], PASS)
        self.assertEqual(s["kappa_faithful"], PASS)
        self.assertEqual(s["kappa_prime_relations"], SKIPPED)

    def test_structure_suite_on_k4(self):
        report = run_pipeline(4, "structure", seed=1)
        self.assertTrue(report.passed)
        self.assertEqual(statuses(report)["isolated_subsemigroups"], SKIPPED)

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            run_pipeline(2, "everything")

    def test_same_seed_same_report(self):
        a = run_pipeline(3, "rewrite", seed=12, preset="quick").to_dict()
        b = run_pipeline(3, "rewrite", seed=12, preset="quick").to_dict()
        self.assertEqual(a, b)


class TestPresets(unittest.TestCase):
    def test_quick_preset_skips_expensive_checks(self):
        table = enumerate_semigroup(3)
        report = StructurePipeline(preset="quick").run(table, seed=0)
        self.assertTrue(report.passed)
        s = statuses(report)
        self.assertEqual(s["isolated_subsemigroups"], SKIPPED)
        self.assertEqual(s["associativity"], PASS)

        report = AlgebraPipeline(preset="quick").run(enumerate_semigroup(3))
        self.assertEqual(statuses(report)["nonfaithful_projectives"], SKIPPED)

    def test_unknown_preset_falls_back_to_default(self):
        for cls, logger_name in (
            (RewriteSuite, "kiselman.pipeline"),
            (StructurePipeline, "kiselman.semigroup"),
            (RepresentationPipeline, "kiselman.repr"),
            (AlgebraPipeline, "kiselman.algebra"),
        ):
            with self.assertLogs(logger_name, level="WARNING"):
                suite = cls(preset="does-not-exist")
            self.assertEqual(suite.get_current_settings(), cls.DEFAULT_CONFIG)

    def test_load_preset_returns_self(self):
        suite = RewriteSuite()
        self.assertIs(suite.load_preset("acceptance"), suite)
        self.assertEqual(suite.get_current_settings()["confluence_words"], 10_000)

    def test_settings_copy_is_detached(self):
        suite = AlgebraPipeline()
        settings = suite.get_current_settings()
        settings["corner_max_rank"] = 0
        self.assertEqual(suite.get_current_settings()["corner_max_rank"], 4)


class TestProductCap(unittest.TestCase):
    def test_structure_suite_without_product_table(self):
        table = enumerate_semigroup(3, product_cap=100)
        report = StructurePipeline().run(table, seed=0)
        s = statuses(report)
        self.assertEqual(s["product_table"], SKIPPED)
        self.assertEqual(s["size"], PASS)
        self.assertNotIn("associativity", s)
        self.assertTrue(report.passed)

    def test_algebra_suite_skips_multiplicativity(self):
        table = enumerate_semigroup(2, product_cap=10)
        report = AlgebraPipeline().run(table)
        self.assertEqual(statuses(report)["rho_multiplicative"], SKIPPED)
        self.assertTrue(report.passed)


if __name__ == "__main__":
    unittest.main()

"""
Tests for configuration, the experiment registry, the harness, reporting and the CLI.
"""

import csv
import io
import json
import os
import tempfile
import unittest

from tests import ROOT  # noqa: F401
from chainring.core.harness import Harness, build_config
from chainring.core.models import EXPERIMENTS
from chainring.core.reporting import CSV_COLUMNS, render, to_csv, to_json
from chainring.errors import ConfigError, UnknownExperiment
from chainring.experiments.base import Experiment
from chainring.experiments.manager import ExperimentRegistry, default_registry
from cli.main import main


class TestConfig(unittest.TestCase):
    def test_errors_name_the_field(self):
        for field, value in (("format", "xml"), ("trials", 0), ("graph", "cycle"), ("seed", -1)):
            with self.assertRaises(ConfigError) as ctx:
                build_config(experiment="nica", **{field: value})
            self.assertEqual(ctx.exception.field, field)

    def test_none_values_use_defaults(self):
        config = build_config(experiment="nica", d=None, seed=None)
        self.assertEqual(config.seed, 0)
        self.assertIsNone(config.d)

    def test_unknown_experiment(self):
        with self.assertRaises(UnknownExperiment) as ctx:
            Harness().run(build_config(experiment="bogus"))
        self.assertEqual(ctx.exception.field, "experiment")

    def test_bad_ring(self):
        with self.assertRaises(ConfigError) as ctx:
            Harness().run(build_config(experiment="nica", ring="4^1^2:cyclic"))
        self.assertEqual(ctx.exception.field, "ring")


class ConstantExperiment(Experiment):
    randomized = False

    def __init__(self, value: float = 1.0):
        self.value = value

    @property
    def name(self) -> str:
        return "constant"

    @property
    def description(self) -> str:
        return "Reports a fixed value"

    def verify(self, config, ring, trial, sizes, rng):
        return [self.row(config, ring, trial, observed=self.value, main_term=1.0, passed=self.value == 1.0)]


class TestRegistry(unittest.TestCase):
    def test_every_experiment_registered(self):
        self.assertEqual(default_registry().names(), sorted(EXPERIMENTS))

    def test_custom_experiment_runs(self):
        registry = ExperimentRegistry()
        registry.register(ConstantExperiment())
        self.assertEqual(registry.names(), ["constant"])
        report = Harness(registry).run(build_config(experiment="constant", trials=5))
        self.assertEqual(report.summary.rows, 1)
        self.assertTrue(report.all_passed)

    def test_register_overwrites(self):
        registry = ExperimentRegistry()
        registry.register(ConstantExperiment())
        with self.assertLogs("chainring.experiments.manager", level="WARNING"):
            registry.register(ConstantExperiment(2.0))
        self.assertEqual(registry.get("constant").value, 2.0)
        report = Harness(registry).run(build_config(experiment="constant"))
        self.assertFalse(report.all_passed)

    def test_resolve_unknown(self):
        registry = ExperimentRegistry()
        self.assertIsNone(registry.get("nica"))
        with self.assertRaises(UnknownExperiment):
            registry.resolve("nica")
        with self.assertRaises(UnknownExperiment):
            Harness(registry).run(build_config(experiment="nica"))


class TestHarness(unittest.TestCase):
    def setUp(self):
        self.harness = Harness()

    def test_nica_passes(self):
        report = self.harness.run(build_config(experiment="nica", d=2, trials=20, seed=7))
        self.assertEqual(report.config.d, 2)
        self.assertEqual(report.summary.rows, 20)
        self.assertTrue(report.all_passed)
        self.assertEqual(report.summary.pass_rate, 1.0)

    def test_deterministic_csv(self):
        config = build_config(experiment="mixing", trials=5, seed=11)
        first = to_csv(self.harness.run(config))
        second = to_csv(self.harness.run(config))
        self.assertEqual(first, second)

    def test_workers_do_not_change_rows(self):
        serial = self.harness.run(build_config(experiment="energy", trials=6, seed=3, sizes=[(10, 12)]))
        pooled = self.harness.run(build_config(experiment="energy", trials=6, seed=3, sizes=[(10, 12)], workers=3))
        self.assertEqual(to_csv(serial), to_csv(pooled))

    def test_csv_layout(self):
        report = self.harness.run(build_config(experiment="variance", trials=3, seed=2))
        rows = list(csv.reader(io.StringIO(render(report, "csv"))))
        self.assertEqual(rows[0], CSV_COLUMNS)
        self.assertIn("pass", rows[0])
        self.assertEqual(len(rows), 4)
        self.assertTrue(all(row[rows[0].index("pass")] == "true" for row in rows[1:]))

    def test_json_layout(self):
        report = self.harness.run(build_config(experiment="spectrum", trials=4, format="json"))
        data = json.loads(to_json(report))
        self.assertIn("pass", data["rows"][0])
        self.assertNotIn("passed", data["rows"][0])
        self.assertNotIn("wall_time", data["summary"])
        # the spectrum check is not randomized
        self.assertEqual(len(data["rows"]), 1)

    def test_sweep(self):
        report = self.harness.run(build_config(command="sweep", experiment="nica", d=1))
        self.assertEqual(report.summary.rows, 6)
        self.assertTrue(report.all_passed)

    def test_default_sizes_recorded(self):
        report = self.harness.run(build_config(experiment="permanents", k=2, trials=2))
        self.assertEqual(report.metadata["sizes"], [[4, 0]])


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def test_ring_info(self):
        out = self.path("ring.txt")
        self.assertEqual(main(["ring", "info", "--ring", "3^1^2:cyclic", "--out", out]), 0)
        with open(out, encoding="utf-8") as f:
            text = f.read()
        self.assertIn("order: 9\n", text)
        self.assertIn("units: 6\n", text)

    def test_verify_exit_code(self):
        out = self.path("nica.csv")
        code = main(["verify", "nica", "--d", "2", "--trials", "5", "--seed", "7", "--out", out])
        self.assertEqual(code, 0)
        with open(out, encoding="utf-8") as f:
            self.assertEqual(len(f.read().splitlines()), 6)

    def test_bad_ring_is_usage_error(self):
        self.assertEqual(main(["verify", "nica", "--ring", "3^1^0:cyclic", "--out", self.path("x")]), 2)
        self.assertEqual(main(["ring", "info", "--ring", "nonsense"]), 2)

    def test_unknown_experiment_is_usage_error(self):
        with self.assertRaises(SystemExit) as ctx:
            main(["verify", "bogus"])
        self.assertEqual(ctx.exception.code, 2)

    def test_dump_only_for_graph(self):
        for command in (["verify", "nica"], ["sweep", "nica"]):
            with self.assertRaises(SystemExit) as ctx:
                main(command + ["--dump", self.path("graph.txt")])
            self.assertEqual(ctx.exception.code, 2)
        dump = self.path("graph.txt")
        code = main(["graph", "spectrum", "--ring", "3^1^1:cyclic", "--d", "2", "--out", self.path("s.txt"), "--dump", dump])
        self.assertEqual(code, 0)
        with open(dump, encoding="utf-8") as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], "part_a=8 part_b=8 deg_a=3 deg_b=3")
        self.assertEqual(len(lines), 9)

    def test_graph_spectrum(self):
        out = self.path("spectrum.txt")
        code = main(["graph", "spectrum", "--graph", "er", "--d", "3", "--out", out])
        self.assertEqual(code, 0)
        with open(out, encoding="utf-8") as f:
            values = [float(line) for line in f.read().split()]
        self.assertEqual(len(values), 117)
        self.assertAlmostEqual(values[0], 12.0, places=6)
        self.assertLessEqual(values[1], 27 ** 0.5 + 1e-6)


if __name__ == "__main__":
    unittest.main()

from unittest import TestCase

from PyLRC.Classify.Growth import GrowthTag, classify_growth, forcing_subgraph
from PyLRC.Classify.Table import ClassificationTable, classification_table, isolated_free_classes
from PyLRC.Construct.Gamma import gamma_injective
from PyLRC.Construct.Local import construct_p3, construct_te, construct_tp
from PyLRC.Core.Pattern import are_isomorphic, parse_pattern
from PyLRC.Data import Pattern, pattern_names
from PyLRC.Data.Patterns import FOUR_EDGE, NICE_FOUR_EDGE
from PyLRC.Errors import InputError
from PyLRC.Verify.Local import verify_local


class TestClassifyGrowth(TestCase):
    def test_examples(self):
        expected = {"K3": GrowthTag.BOUNDED_BY_FIVE, "P2": GrowthTag.BOUNDED_BY_FIVE, "P1": GrowthTag.BOUNDED_BY_FIVE,
                    "P3": GrowthTag.UNBOUNDED_SUBPOLYNOMIAL, "Tp": GrowthTag.UNBOUNDED_SUBPOLYNOMIAL,
                    "Te": GrowthTag.UNBOUNDED_SUBPOLYNOMIAL, "P3P1": GrowthTag.UNKNOWN,
                    "C4": GrowthTag.POLYNOMIAL, "P4": GrowthTag.POLYNOMIAL, "K4": GrowthTag.POLYNOMIAL,
                    "C6": GrowthTag.POLYNOMIAL}
        for name, tag in expected.items():
            self.assertEqual(classify_growth(Pattern(name)).tag, tag, name)
        for name in NICE_FOUR_EDGE:
            self.assertEqual(classify_growth(Pattern(name)).tag, GrowthTag.POLYNOMIAL, name)

    def test_exponents(self):
        self.assertAlmostEqual(classify_growth(Pattern("C4")).exponent, 1 / 3)
        self.assertAlmostEqual(classify_growth(Pattern("P4")).exponent, 1 / 5)
        self.assertAlmostEqual(classify_growth(Pattern("K14")).exponent, 1 / 6)
        self.assertAlmostEqual(classify_growth(Pattern("C6")).exponent, 1 / 2)
        self.assertAlmostEqual(classify_growth(Pattern("K4")).exponent, 1 / 3)
        self.assertIsNone(classify_growth(Pattern("P3")).exponent)

    def test_isolated_vertices(self):
        P3 = parse_pattern("n=6; edges=0-1,1-2,2-3")
        self.assertEqual(classify_growth(P3).tag, GrowthTag.UNBOUNDED_SUBPOLYNOMIAL)
        for name in pattern_names():
            H = Pattern(name)
            for extra in (1, 2):
                self.assertEqual(classify_growth(H.with_isolated(extra)), classify_growth(H), name)

    def test_str(self):
        self.assertEqual(str(classify_growth(Pattern("K3"))), "BoundedByFive")

    def test_forcing_subgraph(self):
        self.assertEqual(forcing_subgraph(Pattern("K4")), "C4")
        self.assertEqual(forcing_subgraph(Pattern("C6")), "P4")
        self.assertIsNone(forcing_subgraph(Pattern("Tp")))

    def test_subpolynomial_witnesses(self):
        gamma = gamma_injective(12, 3)
        builders = {"P3": lambda: construct_p3(12, gamma), "Tp": lambda: construct_tp(12, gamma),
                    "Te": lambda: construct_te(12)}
        for name, build in builders.items():
            self.assertEqual(classify_growth(Pattern(name)).tag, GrowthTag.UNBOUNDED_SUBPOLYNOMIAL)
            self.assertIsNone(verify_local(build(), Pattern(name)), name)


class TestClassificationTable(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = classification_table(5)

    def test_class_counts(self):
        counts = {}
        for row in self.table.rows:
            counts[row["edges"]] = counts.get(row["edges"], 0) + 1
        self.assertEqual(counts, {1: 1, 2: 2, 3: 5, 4: 11, 5: 26})

    def test_four_edge_classes(self):
        four = [H for H in self.table.classes if H.edge_count == 4]
        for name in FOUR_EDGE:
            self.assertEqual(sum(are_isomorphic(H, Pattern(name)) for H in four), 1, name)
        nice = [row for row in self.table.rows if row["edges"] == 4 and row["nice"]]
        self.assertEqual(len(nice), 6)
        self.assertEqual(sorted(row["name"] for row in nice), sorted(NICE_FOUR_EDGE))

    def test_expectations(self):
        expected = {"K3": "BoundedByFive", "P3": "UnboundedSubpolynomial", "Tp": "UnboundedSubpolynomial",
                    "Te": "UnboundedSubpolynomial", "P3P1": "Unknown", "C4": "Polynomial", "P4": "Polynomial"}
        expected.update({name: "Polynomial" for name in NICE_FOUR_EDGE})
        by_name = {row["name"]: row["growth"] for row in self.table.rows if row["name"]}
        for name, growth in expected.items():
            self.assertEqual(by_name[name], growth, name)
        for row in self.table.rows:
            if row["edges"] >= 5:
                self.assertEqual(row["growth"], "Polynomial", row["pattern"])
            elif row["edges"] <= 3 and row["name"] != "P3":
                self.assertEqual(row["growth"], "BoundedByFive", row["pattern"])

    def test_polynomial_classes_contain_forcing_graph(self):
        for H, row in zip(self.table.classes, self.table.rows):
            if row["growth"] == "Polynomial":
                self.assertIsNotNone(forcing_subgraph(H), row["pattern"])

    def test_reports(self):
        records = self.table.to_records()
        self.assertEqual(len(records), 45)
        self.assertTrue(all(len(line.split("\t")) == 3 for line in records))
        self.assertIn("growth", self.table.to_text())
        self.assertEqual(list(self.table.dataframe().columns),
                         ["edges", "vertices", "pattern", "name", "growth", "exponent", "nice"])

    def test_classes_are_isolated_free(self):
        for H in isolated_free_classes(4):
            self.assertEqual(H.isolated_vertices, [])

    def test_limits(self):
        with self.assertRaises(InputError):
            ClassificationTable(6)
        with self.assertRaises(InputError):
            ClassificationTable(0)

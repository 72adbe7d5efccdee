# File: moments/generators.py
import numpy as np

from moments.models import AtomicMeasure


class MeasureGenerator:
    """Generates random atomic measures on [-1, 1] for roundtrip corpora"""

    def __init__(self, seed=0, max_atoms=4, min_weight=0.05, max_weight=1.0):
        self.rng = np.random.default_rng(seed)
        self.max_atoms = max_atoms
        self.min_weight = min_weight
        self.max_weight = max_weight

    def get_nodes(self, count):
        """Distinct nodes in [-1, 1]; the endpoints are drawn now and then"""
        nodes = set()
        while len(nodes) < count:
            roll = self.rng.random()
            if roll < 0.1:
                nodes.add(1.0 if roll < 0.05 else -1.0)
            else:
                nodes.add(round(float(self.rng.uniform(-1.0, 1.0)), 12))
        return sorted(nodes)

    def get_weights(self, count):
        return [float(w) for w in self.rng.uniform(self.min_weight, self.max_weight, size=count)]

    def generate(self):
        """One measure with 1..max_atoms atoms"""
        count = int(self.rng.integers(1, self.max_atoms + 1))
        return AtomicMeasure.from_pairs(zip(self.get_nodes(count), self.get_weights(count)))

    def take(self, count):
        return [self.generate() for _ in range(count)]


class SeparatedMeasureGenerator(MeasureGenerator):
    """Measures whose atoms are well separated, for atom recovery checks"""

    def __init__(self, seed=0, max_atoms=3, separation=0.2, min_weight=0.1, max_weight=1.0):
        super().__init__(seed, max_atoms, min_weight, max_weight)
        self.separation = separation

    def get_nodes(self, count):
        while True:
            nodes = sorted(float(x) for x in self.rng.uniform(-1.0, 1.0, size=count))
            if all(b - a >= self.separation for a, b in zip(nodes, nodes[1:])):
                return nodes

#!/usr/bin/env python3
# Copyright 2026 The RSL Workbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/corpus.g6 with networkx's graph6 writer."""

import random
import sys

import networkx as nx


def main(path):
    rng = random.Random(20260101)
    graphs = [nx.empty_graph(n) for n in (0, 1, 2, 62)]
    graphs += [nx.complete_graph(n) for n in (2, 3, 7, 12, 62)]
    graphs += [nx.cycle_graph(n) for n in (3, 5, 13, 61)]
    graphs += [nx.petersen_graph(), nx.heawood_graph(), nx.hypercube_graph(5)]
    graphs += [nx.complete_bipartite_graph(a, b) for a, b in ((3, 4), (4, 4), (5, 9))]
    for _ in range(200):
        n = rng.randint(1, 62)
        graphs.append(nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(2**32)))
    with open(path, "w") as out:
        for g in graphs:
            g = nx.convert_node_labels_to_integers(g)
            out.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/corpus.g6")

// Bundled example boards. These are inputs a user could type themselves;
// what they do is entirely up to the service.

import type { GraphSpec, PeriodicSpecDoc } from "./api";

// Three lights in a row; the ends press themselves (blue), the middle
// does not (white).
export const BLUE_WHITE_PATH: GraphSpec = {
    n: 3,
    edges: [[1, 2], [2, 3]],
    self_loops: [1, 3],
};

// Mutual neighbors, nobody presses themselves: a single lit light is
// provably unreachable from all-off.
export const TRIANGLE: GraphSpec = {
    n: 3,
    edges: [[1, 2], [1, 3], [2, 3]],
    self_loops: [],
};

// One-sided infinite path where every light presses itself.
export const CLOSED_PATH_SPEC: PeriodicSpecDoc = {
    format: "gf2lights/periodic-spec",
    version: 1,
    cell_size: 1,
    cell_diag: [[1]],
    cell_coupling: [[1]],
    preamble: [],
};

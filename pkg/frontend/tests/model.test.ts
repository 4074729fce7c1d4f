import { describe, expect, it } from "vitest";

import type {
    BoardPayload, HintPayload, PrefixPayload, SolutionPayload,
} from "../src/api";
import {
    boardView, emptyView, overlayVertices, stripView,
    withHint, withSolution, withToast,
} from "../src/model";
import { cassette } from "./fake_gateway";

const bwBoard = cassette("bw_press")[0].response as BoardPayload;
const gridBoard = cassette("grid55_solve")[0].response as BoardPayload;

describe("boardView", () => {
    it("derives cells from the payload state and self loops", () => {
        const vm = boardView(bwBoard);
        expect(vm.mode).toBe("board");
        expect(vm.boardId).toBe("b1");
        expect(vm.rows).toBe(1);
        expect(vm.cols).toBe(3);
        expect(vm.cells.map(c => c.lit)).toEqual([true, true, false]);
        expect(vm.cells.map(c => c.blue)).toEqual([true, false, true]);
        expect(vm.cells.map(c => c.vertex)).toEqual([1, 2, 3]);
    });

    it("keeps grid geometry from the payload", () => {
        const vm = boardView(gridBoard);
        expect(vm.rows).toBe(5);
        expect(vm.cols).toBe(5);
        expect(vm.cells).toHaveLength(25);
        expect(vm.cells.every(c => c.lit)).toBe(true);
        expect(vm.cells.every(c => c.blue)).toBe(true);
    });

    it("carries only the requested overlay leftovers", () => {
        const vm = boardView(bwBoard, new Set([2, 3]));
        expect(overlayVertices(vm)).toEqual([2, 3]);
        expect(overlayVertices(boardView(bwBoard))).toEqual([]);
    });
});

describe("withHint", () => {
    it("highlights the hinted cell and says how many remain", () => {
        const hint: HintPayload = { solvable: true, vertex: 1, remaining: 1 };
        const vm = withHint(boardView(bwBoard), hint);
        expect(vm.cells.map(c => c.hinted)).toEqual([true, false, false]);
        expect(vm.banner).toBe("Hint: press 1 (1 to go).");
    });

    it("reports when the board is already at the target", () => {
        const hint: HintPayload = { solvable: true, vertex: null, remaining: 0 };
        const vm = withHint(boardView(bwBoard), hint);
        expect(vm.cells.some(c => c.hinted)).toBe(false);
        expect(vm.banner).toBe("Already at the target.");
    });

    it("explains the witness on unsolvable boards", () => {
        const hint: HintPayload = { solvable: false, witness: [1, 2, 3] };
        const vm = withHint(boardView(bwBoard), hint);
        expect(vm.banner).toContain("1, 2, 3");
        expect(vm.banner).toContain("Unsolvable");
    });
});

describe("withSolution", () => {
    it("marks exactly the clicked cells, overlay count equals weight", () => {
        const solution: SolutionPayload =
            cassette("grid55_solve")[1].response as SolutionPayload;
        const vm = withSolution(boardView(gridBoard), solution);
        expect(overlayVertices(vm)).toEqual(solution.clicks);
        expect(overlayVertices(vm)).toHaveLength(solution.weight ?? -1);
        expect(vm.banner).toContain("15");
    });

    it("clears marks and shows the witness when unsolvable", () => {
        const solution: SolutionPayload =
            cassette("triangle")[1].response as SolutionPayload;
        const base = withHint(boardView(bwBoard),
                              { solvable: true, vertex: 1, remaining: 1 });
        const vm = withSolution(base, solution);
        expect(vm.cells.some(c => c.hinted || c.overlay)).toBe(false);
        expect(vm.banner).toContain("1, 2, 3");
    });
});

describe("stripView", () => {
    it("shows the certified prefix with its badge", () => {
        const payload: PrefixPayload =
            cassette("strip_exact")[1].response as PrefixPayload;
        const vm = stripView(payload);
        expect(vm.mode).toBe("strip");
        expect(vm.rows).toBe(1);
        expect(vm.cols).toBe(6);
        expect(vm.badge).toBe("EXACT");
        expect(overlayVertices(vm)).toEqual([2, 5]);
        expect(vm.cells.every(c => c.blue)).toBe(true);
        expect(vm.cells.every(c => !c.lit)).toBe(true);
    });

    it("keeps the horizon certificate visible", () => {
        const payload: PrefixPayload =
            cassette("strip_horizon")[0].response as PrefixPayload;
        expect(stripView(payload).badge).toBe("HORIZON(4)");
    });
});

describe("small states", () => {
    it("starts empty", () => {
        const vm = emptyView();
        expect(vm.cells).toHaveLength(0);
        expect(vm.banner).toBeNull();
        expect(vm.toast).toBeNull();
    });

    it("attaches a toast without touching the cells", () => {
        const vm = withToast(boardView(bwBoard), "boom");
        expect(vm.toast).toBe("boom");
        expect(vm.cells).toHaveLength(3);
    });
});

import { describe, expect, it, vi } from "vitest";

import type { BoardPayload, PrefixPayload, SolutionPayload } from "../src/api";
import {
    boardView, emptyView, stripView, withHint, withSolution, withToast,
} from "../src/model";
import { Handlers, renderBoard } from "../src/render";
import { cassette } from "./fake_gateway";

const bwBoard = cassette("bw_press")[0].response as BoardPayload;
const gridBoard = cassette("grid55_solve")[0].response as BoardPayload;

function handlers(): Handlers {
    return { onCellClick: vi.fn(), onLoadMore: vi.fn() };
}

describe("renderBoard", () => {
    it("renders 25 lit cells for the all-on grid", () => {
        const el = renderBoard(boardView(gridBoard), handlers());
        expect(el.querySelectorAll(".cell.on")).toHaveLength(25);
        expect(el.querySelectorAll(".cell.off")).toHaveLength(0);
        const grid = el.querySelector(".grid") as HTMLElement;
        expect(grid.style.gridTemplateColumns).toContain("repeat(5,");
    });

    it("renders nothing lit for an empty view", () => {
        const el = renderBoard(emptyView(), handlers());
        expect(el.querySelectorAll(".cell")).toHaveLength(0);
        expect(el.querySelectorAll(".cell.on")).toHaveLength(0);
    });

    it("colors self-loop rings blue and the rest white", () => {
        const el = renderBoard(boardView(bwBoard), handlers());
        const rings = [...el.querySelectorAll(".cell")]
            .map(c => (c.classList.contains("ring-blue") ? "blue" : "white"));
        expect(rings).toEqual(["blue", "white", "blue"]);
    });

    it("marks the hint and overlay cells", () => {
        const solution =
            cassette("bw_hint_solve")[2].response as SolutionPayload;
        let vm = withSolution(boardView(bwBoard), solution);
        vm = withHint(vm, { solvable: true, vertex: 1, remaining: 1 });
        const el = renderBoard(vm, handlers());
        expect(el.querySelectorAll(".cell.hint")).toHaveLength(1);
        expect(el.querySelectorAll(".cell.overlay")).toHaveLength(1);
        const hinted = el.querySelector(".cell.hint") as HTMLElement;
        expect(hinted.dataset.vertex).toBe("1");
    });

    it("shows banner and toast text", () => {
        let vm = withToast(boardView(bwBoard), "vertex 9 out of range 1..3");
        vm = { ...vm, banner: "Hint: press 1 (1 to go)." };
        const el = renderBoard(vm, handlers());
        expect(el.querySelector(".banner")?.textContent).toContain("press 1");
        expect(el.querySelector(".toast")?.textContent).toContain("out of range");
    });

    it("dispatches clicks with the 1-based vertex", () => {
        const h = handlers();
        const el = renderBoard(boardView(bwBoard), h);
        const cells = el.querySelectorAll<HTMLButtonElement>(".cell");
        cells[1].click();
        expect(h.onCellClick).toHaveBeenCalledWith(2);
        expect(h.onCellClick).toHaveBeenCalledTimes(1);
    });

    it("renders the strip with badge, disabled cells, and load more", () => {
        const payload = cassette("strip_exact")[0].response as PrefixPayload;
        const h = handlers();
        const el = renderBoard(stripView(payload), h);
        const badge = el.querySelector(".badge") as HTMLElement;
        expect(badge.textContent).toBe("EXACT");
        expect(badge.classList.contains("badge-exact")).toBe(true);
        const cells = el.querySelectorAll<HTMLButtonElement>(".cell");
        expect(cells).toHaveLength(3);
        expect([...cells].every(c => c.disabled)).toBe(true);
        cells[0].click();
        expect(h.onCellClick).not.toHaveBeenCalled();
        const more = el.querySelector(".load-more") as HTMLButtonElement;
        more.click();
        expect(h.onLoadMore).toHaveBeenCalledTimes(1);
    });

    it("styles the horizon badge differently", () => {
        const payload = cassette("strip_horizon")[0].response as PrefixPayload;
        const el = renderBoard(stripView(payload), handlers());
        const badge = el.querySelector(".badge") as HTMLElement;
        expect(badge.textContent).toBe("HORIZON(4)");
        expect(badge.classList.contains("badge-horizon")).toBe(true);
    });

    it("offers no load-more button in board mode", () => {
        const el = renderBoard(boardView(bwBoard), handlers());
        expect(el.querySelector(".load-more")).toBeNull();
    });
});

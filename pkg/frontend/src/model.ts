// View model derivation. Every function here maps a service response to
// what the screen should show; none of them knows the game rules.

import type {
    BoardPayload, HintPayload, PrefixPayload, SolutionPayload,
} from "./api";

export interface CellView {
    vertex: number;      // 1-based, as the service numbers lights
    lit: boolean;
    blue: boolean;       // blue ring: pressing this cell also toggles itself
    hinted: boolean;
    overlay: boolean;    // marked by the current solution or certified prefix
}

export interface ViewModel {
    mode: "board" | "strip";
    boardId: string | null;
    rows: number;
    cols: number;
    cells: CellView[];
    badge: string | null;    // prefix certificate: "EXACT" or "HORIZON(H)"
    banner: string | null;   // hint text or unsolvability explanation
    toast: string | null;    // error from the last request
}

export function emptyView(): ViewModel {
    return {
        mode: "board", boardId: null, rows: 0, cols: 0, cells: [],
        badge: null, banner: null, toast: null,
    };
}

/**
 * Derive a board view from a board payload. keepOverlay carries the
 * still-unclicked part of a solution overlay across a press; it is a
 * display leftover, never a computed plan.
 */
export function boardView(payload: BoardPayload,
                          keepOverlay?: Set<number>): ViewModel {
    const loops = new Set(payload.self_loops);
    const cells: CellView[] = [];
    for (let i = 0; i < payload.n; i++) {
        cells.push({
            vertex: i + 1,
            lit: payload.state[i] === "1",
            blue: loops.has(i + 1),
            hinted: false,
            overlay: keepOverlay?.has(i + 1) ?? false,
        });
    }
    return {
        mode: "board",
        boardId: payload.id,
        rows: payload.rows ?? 1,
        cols: payload.cols ?? payload.n,
        cells,
        badge: null,
        banner: null,
        toast: null,
    };
}

/** Derive a strip view from a prefix answer. */
export function stripView(payload: PrefixPayload): ViewModel {
    if (!payload.solvable) {
        return {
            ...emptyView(), mode: "strip",
            banner: payload.detail ?? "no consistent prefix",
        };
    }
    const prefix = payload.prefix ?? "";
    const loops = payload.self_loops ?? "";
    const cells: CellView[] = [];
    for (let i = 0; i < payload.p; i++) {
        cells.push({
            vertex: i + 1,
            lit: false,
            blue: loops[i] === "1",
            hinted: false,
            overlay: prefix[i] === "1",
        });
    }
    return {
        mode: "strip", boardId: null, rows: 1, cols: payload.p, cells,
        badge: payload.certificate ?? null, banner: null, toast: null,
    };
}

function witnessBanner(witness: number[]): string {
    const lights = witness.join(", ");
    return `Unsolvable. Witness lights ${lights}: every press toggles an ` +
        "even number of them, but the target needs an odd change.";
}

export function withHint(vm: ViewModel, hint: HintPayload): ViewModel {
    if (!hint.solvable) {
        return clearMarks(vm, { banner: witnessBanner(hint.witness ?? []) });
    }
    if (hint.vertex == null) {
        return clearMarks(vm, { banner: "Already at the target." });
    }
    const cells = vm.cells.map(cell => ({
        ...cell, hinted: cell.vertex === hint.vertex,
    }));
    const banner = `Hint: press ${hint.vertex} (${hint.remaining} to go).`;
    return { ...vm, cells, banner, toast: null };
}

export function withSolution(vm: ViewModel,
                             solution: SolutionPayload): ViewModel {
    if (!solution.solvable) {
        return clearMarks(vm, { banner: witnessBanner(solution.witness ?? []) });
    }
    const clicks = new Set(solution.clicks ?? []);
    const cells = vm.cells.map(cell => ({
        ...cell, hinted: false, overlay: clicks.has(cell.vertex),
    }));
    const banner = `Solution: press the ${solution.weight} marked cells.`;
    return { ...vm, cells, banner, toast: null };
}

export function withToast(vm: ViewModel, message: string): ViewModel {
    return { ...vm, toast: message };
}

function clearMarks(vm: ViewModel,
                    patch: Partial<ViewModel>): ViewModel {
    const cells = vm.cells.map(cell => ({
        ...cell, hinted: false, overlay: false,
    }));
    return { ...vm, cells, toast: null, ...patch };
}

/** Vertices currently marked by the solution overlay. */
export function overlayVertices(vm: ViewModel): number[] {
    return vm.cells.filter(cell => cell.overlay).map(cell => cell.vertex);
}

// Playground controller: owns the ViewModel, talks to the gateway, and
// re-renders after every response. Every state change round-trips the
// service; mutations are serialized through a client-side queue.

import {
    ApiError, GatewayClient, GraphSpec, PeriodicSpecDoc, Target,
} from "./api";
import {
    ViewModel, boardView, emptyView, overlayVertices, stripView,
    withHint, withSolution, withToast,
} from "./model";
import { RequestQueue } from "./queue";
import { Handlers, renderBoard } from "./render";

export interface StripOptions {
    mode: "exact" | "horizon";
    horizon?: number;
    n?: number;
}

const LOAD_STEP = 3;
const MAX_PREFIX = 64;

export class PlaygroundApp {
    vm: ViewModel = emptyView();
    target: Target = "off";

    private queue = new RequestQueue();
    private stripSpec: PeriodicSpecDoc | null = null;
    private stripOptions: StripOptions = { mode: "exact" };
    private stripP = 0;
    private handlers: Handlers = {
        onCellClick: vertex => { void this.onCellClick(vertex); },
        onLoadMore: () => { void this.onLoadMore(); },
    };

    constructor(private client: GatewayClient, private root: HTMLElement) {
        this.render();
    }

    newGrid(rows: number, cols: number,
            initial = "all_on"): Promise<void> {
        return this.exec(async () =>
            boardView(await this.client.createGrid(rows, cols, initial)));
    }

    newGraph(graph: GraphSpec, initial = "all_off"): Promise<void> {
        return this.exec(async () =>
            boardView(await this.client.createGraph(graph, initial)));
    }

    /**
     * Press one light. The new view comes from the service response; the
     * only thing carried over is the unclicked remainder of a solution
     * overlay, and any off-plan press drops it entirely.
     */
    onCellClick(vertex: number): Promise<void> {
        const id = this.vm.boardId;
        if (this.vm.mode !== "board" || id === null) {
            this.vm = withToast(this.vm, "no board session");
            this.render();
            return Promise.resolve();
        }
        return this.exec(async () => {
            const overlay = new Set(overlayVertices(this.vm));
            const onPlan = overlay.delete(vertex);
            const payload = await this.client.press(id, vertex);
            return boardView(payload, onPlan ? overlay : undefined);
        });
    }

    onHint(): Promise<void> {
        const id = this.vm.boardId;
        if (id === null) return this.noSession();
        return this.exec(async () =>
            withHint(this.vm, await this.client.hint(id, this.target)));
    }

    onSolve(): Promise<void> {
        const id = this.vm.boardId;
        if (id === null) return this.noSession();
        return this.exec(async () =>
            withSolution(this.vm, await this.client.solution(id, this.target)));
    }

    /** Enter strip mode for a periodic spec and fetch the first window. */
    openStrip(spec: PeriodicSpecDoc, options: StripOptions,
              p = LOAD_STEP): Promise<void> {
        this.stripSpec = spec;
        this.stripOptions = options;
        return this.onPrefix(p);
    }

    onPrefix(p: number): Promise<void> {
        const spec = this.stripSpec;
        if (spec === null) {
            this.vm = withToast(this.vm, "no strip spec loaded");
            this.render();
            return Promise.resolve();
        }
        return this.exec(async () => {
            const payload = await this.client.prefix({
                spec, p, mode: this.stripOptions.mode,
                horizon: this.stripOptions.horizon, n: this.stripOptions.n,
            });
            this.stripP = payload.p;
            return stripView(payload);
        });
    }

    onLoadMore(): Promise<void> {
        return this.onPrefix(Math.min(this.stripP + LOAD_STEP, MAX_PREFIX));
    }

    private noSession(): Promise<void> {
        this.vm = withToast(this.vm, "no board session");
        this.render();
        return Promise.resolve();
    }

    private async exec(update: () => Promise<ViewModel>): Promise<void> {
        try {
            this.vm = await this.queue.run(update);
        } catch (err) {
            const message = err instanceof ApiError
                ? err.message : String(err);
            this.vm = withToast(this.vm, message);
        }
        this.render();
    }

    private render(): void {
        this.root.replaceChildren(renderBoard(this.vm, this.handlers));
    }
}

// Typed client for the gf2lights gateway. The shapes here mirror the
// HTTP service exactly; the client forwards and decodes, nothing more.

export interface BoardPayload {
    id: string;
    n: number;
    rows: number | null;
    cols: number | null;
    state: string;
    self_loops: number[];
}

export interface HintPayload {
    solvable: boolean;
    vertex?: number | null;
    remaining?: number;
    witness?: number[];
}

export interface SolutionPayload {
    solvable: boolean;
    clicks?: number[];
    weight?: number;
    witness?: number[];
}

export interface PrefixPayload {
    p: number;
    solvable: boolean;
    prefix?: string;
    certificate?: string;
    self_loops?: string;
    detail?: string;
}

export interface GraphSpec {
    n: number;
    edges: [number, number][];
    self_loops: number[];
}

// Periodic spec documents are opaque to the client; the service parses them.
export type PeriodicSpecDoc = Record<string, unknown>;

export interface PrefixQuery {
    spec: PeriodicSpecDoc;
    p: number;
    mode: "exact" | "horizon";
    horizon?: number;
    n?: number;
}

export type Target = "off" | "pattern";

// Structural subset of the fetch API, so tests can substitute a fake.
export interface HttpResponse {
    ok: boolean;
    status: number;
    json(): Promise<unknown>;
}

export type FetchLike = (url: string, init?: {
    method?: string;
    headers?: Record<string, string>;
    body?: string;
}) => Promise<HttpResponse>;

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
        this.name = "ApiError";
    }
}

interface ValidationItem {
    loc: string[];
    msg: string;
}

/** Flatten an error body: plain string detail or a validation list. */
export function describeDetail(status: number, data: unknown): string {
    const detail = (data as { detail?: unknown } | null)?.detail;
    if (typeof detail === "string") return detail;
    if (Array.isArray(detail)) {
        return detail
            .map(item => {
                const { loc, msg } = item as ValidationItem;
                return `${(loc ?? []).join(".")}: ${msg}`;
            })
            .join("; ");
    }
    return `HTTP ${status}`;
}

export class GatewayClient {
    constructor(
        private baseUrl: string | (() => string),
        private fetchImpl: FetchLike = (url, init) => fetch(url, init),
    ) {}

    private async request<T>(method: string, path: string,
                             body?: unknown): Promise<T> {
        const base = typeof this.baseUrl === "string"
            ? this.baseUrl : this.baseUrl();
        const init: Parameters<FetchLike>[1] = { method };
        if (body !== undefined) {
            init.headers = { "content-type": "application/json" };
            init.body = JSON.stringify(body);
        }
        const res = await this.fetchImpl(base + path, init);
        const data = await res.json().catch(() => null);
        if (!res.ok) throw new ApiError(res.status, describeDetail(res.status, data));
        return data as T;
    }

    createGrid(rows: number, cols: number,
               initial: string): Promise<BoardPayload> {
        return this.request("POST", "/boards", { grid: { rows, cols }, initial });
    }

    createGraph(graph: GraphSpec, initial: string): Promise<BoardPayload> {
        return this.request("POST", "/boards", { graph, initial });
    }

    getBoard(id: string): Promise<BoardPayload> {
        return this.request("GET", `/boards/${id}`);
    }

    press(id: string, vertex: number): Promise<BoardPayload> {
        return this.request("POST", `/boards/${id}/press`, { vertex });
    }

    hint(id: string, target: Target): Promise<HintPayload> {
        return this.request("GET", `/boards/${id}/hint?target=${target}`);
    }

    solution(id: string, target: Target): Promise<SolutionPayload> {
        return this.request("GET", `/boards/${id}/solution?target=${target}`);
    }

    prefix(query: PrefixQuery): Promise<PrefixPayload> {
        const body: Record<string, unknown> = {
            spec: query.spec, p: query.p, mode: query.mode,
        };
        if (query.mode === "horizon") {
            body.horizon = query.horizon;
            if (query.n !== undefined) body.n = query.n;
        }
        return this.request("POST", "/infinite/prefix", body);
    }
}

// Strict-replay fake of the gateway. Each scenario in fixtures.json was
// recorded from the real service (see capture_fixtures.py); the client
// under test must issue exactly those requests in exactly that order.

import type { FetchLike, HttpResponse } from "../src/api";
import fixturesJson from "./fixtures.json";

export interface Exchange {
    method: string;
    path: string;
    body?: unknown;
    status: number;
    response: unknown;
}

export const cassettes =
    fixturesJson as unknown as Record<string, Exchange[]>;

export function cassette(name: string): Exchange[] {
    const found = cassettes[name];
    if (!found) throw new Error(`no cassette named ${name}`);
    return found;
}

/** JSON.stringify with object keys sorted, for order-insensitive compare. */
export function stableStringify(value: unknown): string {
    if (Array.isArray(value)) {
        return `[${value.map(stableStringify).join(",")}]`;
    }
    if (value !== null && typeof value === "object") {
        const entries = Object.entries(value as Record<string, unknown>)
            .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
            .map(([k, v]) => `${JSON.stringify(k)}:${stableStringify(v)}`);
        return `{${entries.join(",")}}`;
    }
    return JSON.stringify(value);
}

export class FakeGateway {
    private cursor = 0;

    constructor(private exchanges: Exchange[]) {}

    get fetch(): FetchLike {
        return (url, init) => this.handle(url, init);
    }

    private async handle(
        url: string,
        init?: { method?: string; body?: string },
    ): Promise<HttpResponse> {
        const expected = this.exchanges[this.cursor];
        const method = init?.method ?? "GET";
        if (!expected) {
            throw new Error(`unexpected request ${method} ${url}`);
        }
        this.cursor += 1;
        if (method !== expected.method || url !== expected.path) {
            throw new Error(`expected ${expected.method} ${expected.path}, ` +
                `got ${method} ${url}`);
        }
        if (expected.body !== undefined) {
            const got = init?.body === undefined
                ? undefined : JSON.parse(init.body);
            if (stableStringify(got) !== stableStringify(expected.body)) {
                throw new Error(`body mismatch for ${method} ${url}:\n` +
                    `  expected ${stableStringify(expected.body)}\n` +
                    `  got      ${stableStringify(got)}`);
            }
        }
        return {
            ok: expected.status < 400,
            status: expected.status,
            json: async () => expected.response,
        };
    }

    /** Assert the whole cassette was consumed. */
    done(): void {
        const left = this.exchanges.length - this.cursor;
        if (left > 0) {
            throw new Error(`${left} expected requests were never made`);
        }
    }
}

// Integration tests against recorded service traffic. The FakeGateway
// fails the test if the app ever sends a request the real service did
// not see, so these also prove the client computes no game rules.

import { describe, expect, it } from "vitest";

import { GatewayClient } from "../src/api";
import { PlaygroundApp } from "../src/app";
import { overlayVertices } from "../src/model";
import { BLUE_WHITE_PATH, CLOSED_PATH_SPEC, TRIANGLE } from "../src/presets";
import { Exchange, FakeGateway, cassette } from "./fake_gateway";

function makeApp(exchanges: Exchange[]) {
    const fake = new FakeGateway(exchanges);
    const root = document.createElement("main");
    const app = new PlaygroundApp(new GatewayClient("", fake.fetch), root);
    return { app, root, fake };
}

function litVertices(app: PlaygroundApp): number[] {
    return app.vm.cells.filter(c => c.lit).map(c => c.vertex);
}

describe("pressing cells", () => {
    it("pressing the same cell twice restores the original view", async () => {
        const { app, root, fake } = makeApp(cassette("bw_press"));
        await app.newGraph(BLUE_WHITE_PATH, "110");
        const before = root.innerHTML;
        await app.onCellClick(2);
        expect(root.innerHTML).not.toBe(before);
        await app.onCellClick(2);
        expect(root.innerHTML).toBe(before);
        fake.done();
    });

    it("a white-ring press toggles the neighbors but not itself", async () => {
        const { app, fake } = makeApp(cassette("bw_press").slice(0, 2));
        await app.newGraph(BLUE_WHITE_PATH, "110");
        expect(litVertices(app)).toEqual([1, 2]);
        await app.onCellClick(2);
        // vertex 2 has no self loop: 1 and 3 flipped, 2 stayed lit
        expect(litVertices(app)).toEqual([2, 3]);
        fake.done();
    });

    it("a blue-ring press toggles the closed neighborhood", async () => {
        const { app, fake } = makeApp(cassette("grid55_center_press"));
        await app.newGrid(5, 5, "all_off");
        expect(litVertices(app)).toEqual([]);
        await app.onCellClick(13);
        expect(litVertices(app)).toEqual([8, 12, 13, 14, 18]);
        fake.done();
    });

    it("refuses to press without a session", async () => {
        const { app, fake } = makeApp([]);
        await app.onCellClick(1);
        expect(app.vm.toast).toBe("no board session");
        fake.done();
    });
});

describe("hints and solutions", () => {
    it("hint highlights one cell and solve overlays the click set", async () => {
        const { app, root, fake } = makeApp(cassette("bw_hint_solve"));
        await app.newGraph(BLUE_WHITE_PATH, "110");
        await app.onHint();
        expect(root.querySelectorAll(".cell.hint")).toHaveLength(1);
        expect(app.vm.banner).toBe("Hint: press 1 (1 to go).");
        await app.onSolve();
        expect(overlayVertices(app.vm)).toEqual([1]);
        fake.done();
    });

    it("applying the whole solve overlay turns the 5x5 grid off", async () => {
        const { app, fake } = makeApp(cassette("grid55_apply_overlay"));
        await app.newGrid(5, 5, "all_on");
        await app.onSolve();
        const plan = overlayVertices(app.vm);
        expect(plan).toHaveLength(15);
        for (const vertex of plan) {
            await app.onCellClick(vertex);
        }
        expect(litVertices(app)).toEqual([]);
        expect(overlayVertices(app.vm)).toEqual([]);
        fake.done();
    });

    it("walking the pattern-target solution lights the blue cells", async () => {
        const { app, fake } = makeApp(cassette("bw_pattern"));
        app.target = "pattern";
        await app.newGraph(BLUE_WHITE_PATH, "110");
        await app.onSolve();
        for (const vertex of overlayVertices(app.vm)) {
            await app.onCellClick(vertex);
        }
        const blue = app.vm.cells.filter(c => c.blue).map(c => c.vertex);
        expect(litVertices(app)).toEqual(blue);
        fake.done();
    });

    it("an off-plan press drops the stale overlay", async () => {
        const { app, fake } = makeApp(cassette("bw_offplan_press"));
        await app.newGraph(BLUE_WHITE_PATH, "110");
        await app.onSolve();
        expect(overlayVertices(app.vm)).toEqual([1]);
        await app.onCellClick(2);
        expect(overlayVertices(app.vm)).toEqual([]);
        fake.done();
    });

    it("shows the witness banner for the unsolvable triangle", async () => {
        const { app, root, fake } = makeApp(cassette("triangle"));
        await app.newGraph(TRIANGLE, "100");
        await app.onSolve();
        expect(app.vm.banner).toContain("Unsolvable");
        expect(app.vm.banner).toContain("1, 2, 3");
        expect(root.querySelector(".banner")?.textContent)
            .toContain("1, 2, 3");
        await app.onHint();
        expect(app.vm.banner).toContain("1, 2, 3");
        fake.done();
    });
});

describe("strip mode", () => {
    it("shows the EXACT badge for the path spec and loads more", async () => {
        const { app, root, fake } = makeApp(cassette("strip_exact"));
        await app.openStrip(CLOSED_PATH_SPEC, { mode: "exact" });
        expect(app.vm.badge).toBe("EXACT");
        expect(overlayVertices(app.vm)).toEqual([2]);
        const more = root.querySelector(".load-more") as HTMLButtonElement;
        more.click();
        await Promise.resolve();
        await new Promise(res => setTimeout(res, 0));
        expect(app.vm.cols).toBe(6);
        expect(overlayVertices(app.vm)).toEqual([2, 5]);
        expect(app.vm.badge).toBe("EXACT");
        fake.done();
    });

    it("labels horizon answers with their badge", async () => {
        const { app, fake } = makeApp(cassette("strip_horizon"));
        await app.openStrip(CLOSED_PATH_SPEC,
                            { mode: "horizon", horizon: 4, n: 2 });
        expect(app.vm.badge).toBe("HORIZON(4)");
        expect(overlayVertices(app.vm)).toEqual([2]);
        fake.done();
    });
});

describe("errors become toasts", () => {
    it("surfaces a press rejection without changing the board", async () => {
        const { app, root, fake } = makeApp(cassette("press_out_of_range"));
        await app.newGraph(BLUE_WHITE_PATH, "110");
        await app.onCellClick(9);
        expect(app.vm.toast).toBe("vertex 9 out of range 1..3");
        expect(litVertices(app)).toEqual([1, 2]);
        expect(root.querySelector(".toast")?.textContent)
            .toContain("out of range");
        fake.done();
    });

    it("flattens validation errors into readable text", async () => {
        const { app, fake } = makeApp(cassette("prefix_too_long"));
        await app.openStrip(CLOSED_PATH_SPEC, { mode: "exact" }, 100);
        expect(app.vm.toast)
            .toBe("body.p: Input should be less than or equal to 64");
        fake.done();
    });
});

import "./styles.css";
import { GatewayClient } from "./api";
import { PlaygroundApp, StripOptions } from "./app";
import { BLUE_WHITE_PATH, CLOSED_PATH_SPEC, TRIANGLE } from "./presets";

function el<T extends HTMLElement>(id: string): T {
    const found = document.getElementById(id);
    if (!found) throw new Error(`missing #${id}`);
    return found as T;
}

const baseUrlInput = el<HTMLInputElement>("base-url");
const client = new GatewayClient(() => baseUrlInput.value.replace(/\/$/, ""));
const app = new PlaygroundApp(client, el("app"));

function stripOptions(): StripOptions {
    const mode = el<HTMLSelectElement>("strip-mode").value;
    if (mode === "horizon") return { mode: "horizon", horizon: 4, n: 2 };
    return { mode: "exact" };
}

el("new-grid").addEventListener("click", () => {
    void app.newGrid(5, 5, "all_on");
});
el("new-path").addEventListener("click", () => {
    void app.newGraph(BLUE_WHITE_PATH, "110");
});
el("new-triangle").addEventListener("click", () => {
    void app.newGraph(TRIANGLE, "100");
});
el("open-strip").addEventListener("click", () => {
    void app.openStrip(CLOSED_PATH_SPEC, stripOptions());
});
el("hint").addEventListener("click", () => { void app.onHint(); });
el("solve").addEventListener("click", () => { void app.onSolve(); });
el<HTMLSelectElement>("target").addEventListener("change", event => {
    const value = (event.target as HTMLSelectElement).value;
    app.target = value === "pattern" ? "pattern" : "off";
});

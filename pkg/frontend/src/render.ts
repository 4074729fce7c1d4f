// DOM construction from a ViewModel. Pure presentation: cells, rings,
// highlights, badge, banner, toast. No game logic lives here.

import type { ViewModel } from "./model";

export interface Handlers {
    onCellClick(vertex: number): void;
    onLoadMore(): void;
}

export function renderBoard(vm: ViewModel, handlers: Handlers): HTMLElement {
    const root = document.createElement("div");
    root.className = "playground";

    root.appendChild(statusLine(vm));
    if (vm.badge !== null) root.appendChild(badge(vm.badge));
    root.appendChild(grid(vm, handlers));
    if (vm.mode === "strip" && vm.cells.length > 0) {
        const more = document.createElement("button");
        more.className = "load-more";
        more.textContent = "Load more";
        more.addEventListener("click", () => handlers.onLoadMore());
        root.appendChild(more);
    }
    if (vm.banner !== null) {
        root.appendChild(note("banner", vm.banner));
    }
    if (vm.toast !== null) {
        root.appendChild(note("toast", vm.toast));
    }
    return root;
}

function statusLine(vm: ViewModel): HTMLElement {
    const status = document.createElement("div");
    status.className = "status";
    if (vm.mode === "strip") {
        status.textContent = vm.cells.length > 0
            ? `strip window, first ${vm.cells.length} lights`
            : "strip";
    } else if (vm.boardId !== null) {
        status.textContent = `board ${vm.boardId}, ${vm.cells.length} lights`;
    } else {
        status.textContent = "no board loaded";
    }
    return status;
}

function badge(certificate: string): HTMLElement {
    const el = document.createElement("span");
    const kind = certificate.startsWith("HORIZON") ? "horizon" : "exact";
    el.className = `badge badge-${kind}`;
    el.textContent = certificate;
    return el;
}

function grid(vm: ViewModel, handlers: Handlers): HTMLElement {
    const el = document.createElement("div");
    el.className = "grid";
    el.style.gridTemplateColumns = `repeat(${Math.max(vm.cols, 1)}, var(--cell))`;
    for (const cell of vm.cells) {
        const button = document.createElement("button");
        const classes = ["cell", cell.lit ? "on" : "off",
                         cell.blue ? "ring-blue" : "ring-white"];
        if (cell.hinted) classes.push("hint");
        if (cell.overlay) classes.push("overlay");
        button.className = classes.join(" ");
        button.dataset.vertex = String(cell.vertex);
        button.textContent = String(cell.vertex);
        if (vm.mode === "strip") {
            button.disabled = true;
        } else {
            button.addEventListener("click",
                                    () => handlers.onCellClick(cell.vertex));
        }
        el.appendChild(button);
    }
    return el;
}

function note(kind: string, text: string): HTMLElement {
    const el = document.createElement("div");
    el.className = kind;
    el.textContent = text;
    return el;
}

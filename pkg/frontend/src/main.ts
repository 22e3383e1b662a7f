import { createApi } from "./api.js";
import { Controller } from "./controller.js";
import { EXAMPLE_VALUES, parseParams } from "./params.js";
import { render } from "./render.js";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (root === null) throw new Error("missing #app element");

  const api = createApi();
  const controller = new Controller(api);
  controller.subscribe((snap) => {
    render(root, snap, (position) => {
      controller.click(position).catch(showError);
    });
  });
  document.getElementById("undo")?.addEventListener("click", () => controller.undo());
  document.getElementById("hint")?.addEventListener("click", () => {
    controller.requestHint().catch(showError);
  });

  const wanted = parseParams(window.location.search);
  const values =
    wanted === null
      ? EXAMPLE_VALUES
      : (await api.fetchPuzzle(wanted.n, wanted.solvable, wanted.seed)).values;
  await controller.load(values);

  function showError(err: unknown): void {
    const note = root?.querySelector(".note");
    if (note !== null && note !== undefined) {
      note.textContent = err instanceof Error ? err.message : String(err);
    }
  }
}

boot().catch((err: unknown) => {
  const root = document.getElementById("app");
  if (root !== null) {
    root.textContent = err instanceof Error ? err.message : String(err);
  }
});

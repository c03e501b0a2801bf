/** Browser bootstrap: mount the app and delegate clicks. */

import { ApiClient } from "./api.js";
import { App } from "./app.js";

function download(filename: string, text: string): void {
  const link = document.createElement("a");
  link.href = "data:text/plain;charset=utf-8," + encodeURIComponent(text);
  link.download = filename;
  link.click();
}

function boot(): void {
  const mount = document.querySelector<HTMLElement>("#app");
  if (mount === null) {
    return;
  }
  const app = new App(mount, new ApiClient(""));

  mount.addEventListener("click", (event) => {
    const target = event.target as Element | null;
    if (target === null) {
      return;
    }
    const action = target.closest<HTMLElement>("[data-action]");
    if (action !== null && action.dataset.action === "end-path") {
      download("thematic-path.txt", app.finishPath());
      return;
    }
    const node = target.closest<HTMLElement>("[data-theme]");
    if (node !== null && node.dataset.role === "peripheral") {
      void app.recenter(node.dataset.theme ?? "");
    }
  });

  void app.start();
}

document.addEventListener("DOMContentLoaded", boot);

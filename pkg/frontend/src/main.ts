// Entry point: read the API base URL from the runtime config global (set
// in index.html) and boot the app.

import { ApiClient } from "./api.js";
import { createApp } from "./app.js";

declare global {
    interface Window {
        EXPERTQUEST_API_BASE?: string;
    }
}

const root = document.getElementById("app");
if (root) {
    const api = new ApiClient(window.EXPERTQUEST_API_BASE ?? "");
    const app = createApp(root, api);
    void app.init();
}

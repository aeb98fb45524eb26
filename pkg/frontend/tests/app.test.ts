import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import type { CandidateRow, SearchResponse } from "../src/api.js";
import { createApp } from "../src/app.js";
import type { App } from "../src/app.js";

const LANGUAGES = Array.from({ length: 53 }, (_, i) => `Language${String(i).padStart(2, "0")}`);

function candidate(partial: Partial<CandidateRow> & { handle: string }): CandidateRow {
    return {
        display_name: partial.handle.toUpperCase(),
        twitter_followers: 10,
        github_followers: 5,
        bytes_of_code: 100,
        cosine: 0.5,
        mentions_percent: 50,
        microblog_profile_url: `https://twitter.com/${partial.handle}`,
        codehost_profile_url: `https://github.example/${partial.handle}`,
        ...partial,
    };
}

const RESULTS: CandidateRow[] = [
    candidate({ handle: "alice", bytes_of_code: 2000, mentions_percent: 74 }),
    candidate({ handle: "dave", bytes_of_code: 50, mentions_percent: 0 }),
    candidate({ handle: "bob", bytes_of_code: 0, mentions_percent: 100 }),
];

function searchResponse(results: CandidateRow[]): SearchResponse {
    return { language: "Language00", elapsed_ms: 42, results };
}

function jsonResponse(payload: unknown, status = 200): Response {
    return new Response(JSON.stringify(payload), {
        status,
        headers: { "Content-Type": "application/json" },
    });
}

interface Deferred {
    promise: Promise<Response>;
    resolve(response: Response): void;
    reject(error: unknown): void;
}

function deferred(): Deferred {
    let resolve!: (response: Response) => void;
    let reject!: (error: unknown) => void;
    const promise = new Promise<Response>((res, rej) => {
        resolve = res;
        reject = rej;
    });
    return { promise, resolve, reject };
}

/** fetch stub routing the mock service; search responses are programmable. */
function mockService(searchResults: () => Promise<Response>) {
    return vi.fn((input: RequestInfo | URL) => {
        const url = String(input);
        if (url.endsWith("/api/languages")) {
            return Promise.resolve(jsonResponse(LANGUAGES));
        }
        if (url.endsWith("/api/search")) {
            return searchResults();
        }
        if (url.endsWith("/healthz")) {
            return Promise.resolve(
                jsonResponse({ status: "ok", version: "test", backend: "fixture" }),
            );
        }
        return Promise.resolve(jsonResponse({ detail: "no such path" }, 404));
    });
}

function rowData(app: App) {
    return Array.from(app.elements.results.querySelectorAll("tbody tr")).map((row) => {
        const bar = row.querySelector<HTMLElement>(".bar-fill")!;
        const links = Array.from(row.querySelectorAll("a")).map((a) => a.href);
        return {
            handle: (row as HTMLElement).dataset["handle"],
            barWidth: bar.style.width,
            label: row.querySelector(".bar-label")!.textContent,
            links,
        };
    });
}

let root: HTMLElement;

beforeEach(() => {
    document.body.innerHTML = '<div id="app"></div>';
    root = document.getElementById("app")!;
});

afterEach(() => {
    vi.unstubAllGlobals();
});

async function bootApp(searchResults: () => Promise<Response>): Promise<App> {
    vi.stubGlobal("fetch", mockService(searchResults));
    const app = createApp(root, new ApiClient());
    await app.init();
    return app;
}

describe("language loading", () => {
    it("lists all 53 mock languages in order", async () => {
        const app = await bootApp(() => Promise.resolve(jsonResponse(searchResponse([]))));
        const options = Array.from(app.elements.select.options).map((o) => o.value);
        expect(options).toEqual(LANGUAGES);
        expect(app.machine.current.selected).toBe("Language00");
    });

    it("shows an error banner with retry when the service is down", async () => {
        const fetchMock = vi.fn().mockRejectedValue(new TypeError("refused"));
        vi.stubGlobal("fetch", fetchMock);
        const app = createApp(root, new ApiClient());
        await app.init();
        expect(app.elements.error.hidden).toBe(false);
        expect(app.elements.error.textContent).toContain("Could not load languages");

        // the retry affordance reloads the list once the service is back
        vi.stubGlobal("fetch", mockService(() => Promise.resolve(jsonResponse(searchResponse([])))));
        app.elements.retry.click();
        await vi.waitFor(() => {
            expect(app.elements.select.options.length).toBe(53);
        });
        expect(app.elements.error.hidden).toBe(true);
    });
});

describe("search flow", () => {
    it("transitions idle -> searching -> results with a blocking modal", async () => {
        const gate = deferred();
        const app = await bootApp(() => gate.promise);
        expect(app.machine.phase).toBe("idle");
        expect(app.elements.modal.hidden).toBe(true);

        const submitted = app.submit();
        expect(app.machine.phase).toBe("searching");
        expect(app.elements.modal.hidden).toBe(false);
        expect(app.elements.button.disabled).toBe(true);

        gate.resolve(jsonResponse(searchResponse(RESULTS)));
        await submitted;
        expect(app.machine.phase).toBe("results");
        expect(app.elements.modal.hidden).toBe(true);
        expect(app.elements.button.disabled).toBe(false);
        expect(app.elements.results.querySelectorAll("tbody tr").length).toBe(3);
    });

    it("renders rows in response order with bar width equal to mentions_percent", async () => {
        const app = await bootApp(() => Promise.resolve(jsonResponse(searchResponse(RESULTS))));
        await app.submit();
        const rows = rowData(app);
        expect(rows.map((r) => r.handle)).toEqual(["alice", "dave", "bob"]);
        expect(rows.map((r) => r.barWidth)).toEqual(["74%", "0%", "100%"]);
        expect(rows.map((r) => r.label)).toEqual(["74%", "0%", "100%"]);
        for (const row of rows) {
            expect(row.links).toEqual([
                `https://twitter.com/${row.handle}`,
                `https://github.example/${row.handle}`,
            ]);
        }
    });

    it("permuting the mock response permutes the displayed rows identically", async () => {
        const permuted = [RESULTS[2]!, RESULTS[0]!, RESULTS[1]!];
        let payload = RESULTS;
        const app = await bootApp(() => Promise.resolve(jsonResponse(searchResponse(payload))));
        await app.submit();
        expect(rowData(app).map((r) => r.handle)).toEqual(["alice", "dave", "bob"]);

        payload = permuted;
        await app.submit();
        expect(rowData(app).map((r) => r.handle)).toEqual(["bob", "alice", "dave"]);
    });

    it("shows a no-experts message for an empty result", async () => {
        const app = await bootApp(() => Promise.resolve(jsonResponse(searchResponse([]))));
        await app.submit();
        expect(app.machine.phase).toBe("results");
        expect(app.elements.results.textContent).toContain("No experts found");
    });

    it("reports upstream failure as the error phase with a message", async () => {
        const app = await bootApp(() =>
            Promise.resolve(jsonResponse({ detail: "search failed: upstream down" }, 502)),
        );
        await app.submit();
        expect(app.machine.phase).toBe("error");
        expect(app.elements.error.hidden).toBe(false);
        expect(app.elements.error.textContent).toContain("upstream down");
        expect(app.elements.results.querySelector("table")).toBeNull();
    });

    it("ignores submit while a search is in flight", async () => {
        const gate = deferred();
        const app = await bootApp(() => gate.promise);
        const first = app.submit();
        const second = app.submit(); // swallowed: one in-flight search only
        gate.resolve(jsonResponse(searchResponse(RESULTS)));
        await Promise.all([first, second]);
        const fetchMock = globalThis.fetch as ReturnType<typeof vi.fn>;
        const searchCalls = fetchMock.mock.calls.filter(([u]) => String(u).endsWith("/api/search"));
        expect(searchCalls.length).toBe(1);
    });

    it("recovers to idle and supports a follow-up search after an error", async () => {
        let fail = true;
        const app = await bootApp(() =>
            Promise.resolve(
                fail
                    ? jsonResponse({ detail: "boom" }, 502)
                    : jsonResponse(searchResponse(RESULTS)),
            ),
        );
        await app.submit();
        expect(app.machine.phase).toBe("error");
        fail = false;
        await app.submit();
        expect(app.machine.phase).toBe("results");
        expect(rowData(app).length).toBe(3);
    });
});

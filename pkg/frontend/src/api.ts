// Typed client for the search service's JSON API.

export interface CandidateRow {
    handle: string;
    display_name: string;
    twitter_followers: number;
    github_followers: number;
    bytes_of_code: number;
    cosine: number;
    mentions_percent: number;
    microblog_profile_url: string;
    codehost_profile_url: string;
}

export interface SearchResponse {
    language: string;
    elapsed_ms: number;
    results: CandidateRow[];
}

export interface Health {
    status: string;
    version: string;
    backend: string;
}

export class ApiError extends Error {
    constructor(message: string, readonly status?: number) {
        super(message);
        this.name = "ApiError";
    }
}

async function errorDetail(response: Response): Promise<string> {
    try {
        const body = (await response.json()) as { detail?: string };
        if (body && typeof body.detail === "string") {
            return body.detail;
        }
    } catch {
        // non-JSON error body; fall through to the status line
    }
    return `request failed with status ${response.status}`;
}

export class ApiClient {
    constructor(private readonly baseUrl: string = "") {}

    private async getJson<T>(path: string): Promise<T> {
        let response: Response;
        try {
            response = await fetch(this.baseUrl + path);
        } catch (cause) {
            throw new ApiError(`service unreachable: ${String(cause)}`);
        }
        if (!response.ok) {
            throw new ApiError(await errorDetail(response), response.status);
        }
        return (await response.json()) as T;
    }

    languages(): Promise<string[]> {
        return this.getJson<string[]>("/api/languages");
    }

    health(): Promise<Health> {
        return this.getJson<Health>("/healthz");
    }

    async search(
        language: string,
        counts?: { searchCount?: number; timelineCount?: number },
    ): Promise<SearchResponse> {
        const payload: Record<string, unknown> = { language };
        if (counts?.searchCount !== undefined) {
            payload["search_count"] = counts.searchCount;
        }
        if (counts?.timelineCount !== undefined) {
            payload["timeline_count"] = counts.timelineCount;
        }
        let response: Response;
        try {
            response = await fetch(this.baseUrl + "/api/search", {
                method: "POST",
                headers: { "Content-Type": "application/json" },
                body: JSON.stringify(payload),
            });
        } catch (cause) {
            throw new ApiError(`service unreachable: ${String(cause)}`);
        }
        if (!response.ok) {
            throw new ApiError(await errorDetail(response), response.status);
        }
        return (await response.json()) as SearchResponse;
    }
}

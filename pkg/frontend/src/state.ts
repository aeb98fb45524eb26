// UI state machine. Legal phase walk: idle -> searching -> (results | error)
// -> idle. Anything else throws, and search results exist only in the
// results phase.

import type { SearchResponse } from "./api.js";

export type Phase = "idle" | "searching" | "results" | "error";

export interface UiState {
    languages: string[];
    selected: string;
    phase: Phase;
    results: SearchResponse | null;
    errorMessage: string;
}

export class InvalidTransition extends Error {
    constructor(from: Phase, action: string) {
        super(`invalid transition: ${action} while ${from}`);
        this.name = "InvalidTransition";
    }
}

export class UiStateMachine {
    private state: UiState = {
        languages: [],
        selected: "",
        phase: "idle",
        results: null,
        errorMessage: "",
    };

    get current(): Readonly<UiState> {
        return this.state;
    }

    get phase(): Phase {
        return this.state.phase;
    }

    setLanguages(languages: string[]): void {
        this.state.languages = [...languages];
        if (!this.state.selected && languages.length > 0) {
            this.state.selected = languages[0] ?? "";
        }
    }

    select(language: string): void {
        this.state.selected = language;
    }

    beginSearch(): void {
        if (this.state.phase !== "idle") {
            throw new InvalidTransition(this.state.phase, "beginSearch");
        }
        this.state.phase = "searching";
        this.state.results = null;
        this.state.errorMessage = "";
    }

    searchSucceeded(results: SearchResponse): void {
        if (this.state.phase !== "searching") {
            throw new InvalidTransition(this.state.phase, "searchSucceeded");
        }
        this.state.phase = "results";
        this.state.results = results;
    }

    searchFailed(message: string): void {
        if (this.state.phase !== "searching") {
            throw new InvalidTransition(this.state.phase, "searchFailed");
        }
        this.state.phase = "error";
        this.state.results = null;
        this.state.errorMessage = message;
    }

    acknowledge(): void {
        if (this.state.phase !== "results" && this.state.phase !== "error") {
            throw new InvalidTransition(this.state.phase, "acknowledge");
        }
        this.state.phase = "idle";
        this.state.results = null;
        this.state.errorMessage = "";
    }
}

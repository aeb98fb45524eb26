// Controller: wires the language picker, the blocking search modal, and
// the results area to the API client through the state machine. One search
// in flight at a time; the submit control is disabled while searching.

import { ApiClient, ApiError } from "./api.js";
import { UiStateMachine } from "./state.js";
import { renderLanguageOptions, renderResults } from "./view.js";

export interface App {
    machine: UiStateMachine;
    init(): Promise<void>;
    submit(): Promise<void>;
    elements: {
        select: HTMLSelectElement;
        button: HTMLButtonElement;
        modal: HTMLElement;
        results: HTMLElement;
        error: HTMLElement;
        retry: HTMLButtonElement;
    };
}

function skeleton(root: HTMLElement): App["elements"] {
    root.innerHTML = `
      <header>
        <h1>ExpertQuest</h1>
        <p class="tagline">Find programming-language experts.</p>
      </header>
      <form class="search-form">
        <label for="language-select">Language</label>
        <select id="language-select"></select>
        <button id="search-button" type="submit">Search</button>
      </form>
      <div id="error-banner" class="error-banner" hidden>
        <span class="error-message"></span>
        <button id="retry-button" type="button">Retry</button>
      </div>
      <div id="search-modal" class="modal" hidden>
        <div class="modal-box">
          <p>Searching… this can take a while.</p>
          <div class="spinner" aria-label="searching"></div>
        </div>
      </div>
      <main id="results-area" aria-live="polite"></main>
    `;
    return {
        select: root.querySelector<HTMLSelectElement>("#language-select")!,
        button: root.querySelector<HTMLButtonElement>("#search-button")!,
        modal: root.querySelector<HTMLElement>("#search-modal")!,
        results: root.querySelector<HTMLElement>("#results-area")!,
        error: root.querySelector<HTMLElement>("#error-banner")!,
        retry: root.querySelector<HTMLButtonElement>("#retry-button")!,
    };
}

export function createApp(root: HTMLElement, api: ApiClient): App {
    const machine = new UiStateMachine();
    const elements = skeleton(root);

    function showError(message: string): void {
        elements.error.hidden = false;
        elements.error.querySelector(".error-message")!.textContent = message;
    }

    function hideError(): void {
        elements.error.hidden = true;
    }

    async function init(): Promise<void> {
        try {
            const languages = await api.languages();
            machine.setLanguages(languages);
            renderLanguageOptions(elements.select, languages);
            elements.select.value = machine.current.selected;
            hideError();
        } catch (cause) {
            showError(
                cause instanceof ApiError
                    ? `Could not load languages: ${cause.message}`
                    : `Could not load languages: ${String(cause)}`,
            );
        }
    }

    async function submit(): Promise<void> {
        if (machine.phase === "searching") {
            return; // one in-flight search only
        }
        if (machine.phase !== "idle") {
            machine.acknowledge();
        }
        hideError();
        machine.select(elements.select.value);
        machine.beginSearch();
        elements.button.disabled = true;
        elements.modal.hidden = false;
        try {
            const response = await api.search(machine.current.selected);
            machine.searchSucceeded(response);
            renderResults(elements.results, response);
        } catch (cause) {
            const message =
                cause instanceof ApiError ? cause.message : String(cause);
            machine.searchFailed(message);
            elements.results.innerHTML = "";
            showError(`Search failed: ${message}`);
        } finally {
            elements.button.disabled = false;
            elements.modal.hidden = true;
        }
    }

    elements.select.addEventListener("change", () => {
        machine.select(elements.select.value);
    });
    root.querySelector<HTMLFormElement>(".search-form")!.addEventListener(
        "submit",
        (event) => {
            event.preventDefault();
            void submit();
        },
    );
    elements.retry.addEventListener("click", () => {
        if (machine.current.languages.length === 0) {
            void init();
        } else {
            void submit();
        }
    });

    return { machine, init, submit, elements };
}

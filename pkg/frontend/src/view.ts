// DOM rendering. The table shows rows exactly in response order — ranking
// already happened server-side and the UI never re-sorts or filters. The
// only derived number is the progress-bar width, which IS mentions_percent.

import type { CandidateRow, SearchResponse } from "./api.js";

export function renderLanguageOptions(select: HTMLSelectElement, languages: string[]): void {
    select.innerHTML = "";
    for (const name of languages) {
        const option = document.createElement("option");
        option.value = name;
        option.textContent = name;
        select.appendChild(option);
    }
}

function numberCell(value: number): HTMLTableCellElement {
    const cell = document.createElement("td");
    cell.textContent = value.toLocaleString("en-US");
    return cell;
}

function mentionsCell(percent: number): HTMLTableCellElement {
    const cell = document.createElement("td");
    cell.className = "mentions";
    const track = document.createElement("div");
    track.className = "bar-track";
    track.setAttribute("role", "progressbar");
    track.setAttribute("aria-valuenow", String(percent));
    track.setAttribute("aria-valuemin", "0");
    track.setAttribute("aria-valuemax", "100");
    track.setAttribute("aria-label", `mentions ${percent}%`);
    const fill = document.createElement("div");
    fill.className = "bar-fill";
    fill.style.width = `${percent}%`;
    track.appendChild(fill);
    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = `${percent}%`;
    cell.appendChild(track);
    cell.appendChild(label);
    return cell;
}

function linksCell(candidate: CandidateRow): HTMLTableCellElement {
    const cell = document.createElement("td");
    const microblog = document.createElement("a");
    microblog.href = candidate.microblog_profile_url;
    microblog.textContent = "Twitter";
    microblog.target = "_blank";
    microblog.rel = "noopener";
    const codehost = document.createElement("a");
    codehost.href = candidate.codehost_profile_url;
    codehost.textContent = "GitHub";
    codehost.target = "_blank";
    codehost.rel = "noopener";
    cell.appendChild(microblog);
    cell.appendChild(document.createTextNode(" "));
    cell.appendChild(codehost);
    return cell;
}

export function renderRow(candidate: CandidateRow): HTMLTableRowElement {
    const row = document.createElement("tr");
    row.dataset["handle"] = candidate.handle;
    const name = document.createElement("td");
    name.textContent = candidate.display_name;
    row.appendChild(name);
    row.appendChild(numberCell(candidate.bytes_of_code));
    row.appendChild(numberCell(candidate.github_followers));
    row.appendChild(mentionsCell(candidate.mentions_percent));
    row.appendChild(numberCell(candidate.twitter_followers));
    row.appendChild(linksCell(candidate));
    return row;
}

const HEADERS = [
    "Name",
    "Bytes of Code",
    "GitHub Followers",
    "Twitter Mentions",
    "Twitter Followers",
    "Profiles",
];

export function renderResults(container: HTMLElement, response: SearchResponse): void {
    container.innerHTML = "";
    if (response.results.length === 0) {
        const empty = document.createElement("p");
        empty.className = "empty";
        empty.textContent = `No experts found for ${response.language}.`;
        container.appendChild(empty);
        return;
    }
    const caption = document.createElement("p");
    caption.className = "summary";
    caption.textContent =
        `${response.results.length} candidates for ${response.language} ` +
        `(${response.elapsed_ms} ms)`;
    container.appendChild(caption);

    const table = document.createElement("table");
    const head = document.createElement("thead");
    const headRow = document.createElement("tr");
    for (const title of HEADERS) {
        const cell = document.createElement("th");
        cell.textContent = title;
        headRow.appendChild(cell);
    }
    head.appendChild(headRow);
    table.appendChild(head);

    const body = document.createElement("tbody");
    for (const candidate of response.results) {
        body.appendChild(renderRow(candidate));
    }
    table.appendChild(body);
    container.appendChild(table);
}

/** HTML renderers: pure functions from SessionState to markup strings.
 *
 * Interactive elements carry data-action (plus data-* arguments) for the
 * app shell's event delegation; nothing here touches the DOM, so views are
 * testable as plain strings.
 */

import type { SessionState } from "./state.js";
import type { AgreementInfo, ReportRow, ScoreResponse } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function agreementLabel(agreement: AgreementInfo): string {
  const suffix = agreement.kind === "major" ? " Major" : "";
  return `${agreement.institution} – ${agreement.major}${suffix}`;
}

function errorBanner(state: SessionState): string {
  if (!state.error) {
    return "";
  }
  return `<div class="banner banner-error" role="alert">
  <span>${escapeHtml(state.error)}</span>
  <button data-action="retry">Retry</button>
</div>`;
}

export function renderSelectionScreen(state: SessionState): string {
  const byInstitution = new Map<string, AgreementInfo[]>();
  for (const agreement of state.agreements) {
    const bucket = byInstitution.get(agreement.institution) ?? [];
    bucket.push(agreement);
    byInstitution.set(agreement.institution, bucket);
  }
  const groups = [...byInstitution.entries()]
    .map(([institution, agreements]) => {
      const items = agreements
        .map((agreement) => {
          const checked = state.selectedIds.includes(agreement.id)
            ? " checked"
            : "";
          return `<label class="agreement">
  <input type="checkbox" data-action="toggle-agreement" data-id="${escapeHtml(agreement.id)}"${checked}>
  <span>${escapeHtml(agreementLabel(agreement))} (${escapeHtml(agreement.year)})</span>
</label>`;
        })
        .join("\n");
      return `<fieldset class="institution">
  <legend>${escapeHtml(institution)}</legend>
${items}
</fieldset>`;
    })
    .join("\n");
  const disabled = state.selectedIds.length === 0 || state.pending ? " disabled" : "";
  return `${errorBanner(state)}
<section class="selection-screen">
  <h1>Select university/major pairs</h1>
${groups}
  <button class="solve" data-action="solve"${disabled}>Solve</button>
</section>`;
}

function courseChip(course: string, state: SessionState): string {
  const pinned = state.pinned.includes(course);
  const excluded = state.excluded.includes(course);
  const classes = ["course"];
  if (pinned) classes.push("pinned");
  if (excluded) classes.push("excluded");
  return `<span class="${classes.join(" ")}" data-course="${escapeHtml(course)}">
  ${escapeHtml(course)}
  <button data-action="pin" data-course="${escapeHtml(course)}" title="Pin">&#x1F4CC;</button>
  <button data-action="exclude" data-course="${escapeHtml(course)}" title="Exclude">&#x2715;</button>
</span>`;
}

function renderRow(row: ReportRow, state: SessionState): string {
  const badge =
    row.instruction === "COMPLETE_THIS"
      ? `<span class="badge badge-forced">Complete the course in this row.</span>`
      : `<span class="badge badge-choice">Complete ONE of the course options listed in this row.</span>`;
  const options = row.options
    .map((group) => group.map((course) => courseChip(course, state)).join(" AND "))
    .join(`<span class="or"> — Or — </span>`);
  const satisfies = row.satisfies
    .map(([institution, major]) => `<li>${escapeHtml(institution)} – ${escapeHtml(major)}</li>`)
    .join("");
  return `<tr>
  <td>${badge}</td>
  <td>${options}</td>
  <td><ul class="satisfies">${satisfies}</ul></td>
</tr>`;
}

function constraintChips(state: SessionState): string {
  const pins = state.pinned
    .map(
      (course) =>
        `<span class="chip chip-pin">${escapeHtml(course)} <button data-action="unpin" data-course="${escapeHtml(course)}">&times;</button></span>`,
    )
    .join(" ");
  const excludes = state.excluded
    .map(
      (course) =>
        `<span class="chip chip-exclude">${escapeHtml(course)} <button data-action="unexclude" data-course="${escapeHtml(course)}">&times;</button></span>`,
    )
    .join(" ");
  if (!pins && !excludes) {
    return "";
  }
  return `<div class="constraints">
  ${pins ? `<div>Pinned: ${pins}</div>` : ""}
  ${excludes ? `<div>Excluded: ${excludes}</div>` : ""}
</div>`;
}

function infeasiblePanel(state: SessionState): string {
  if (!state.infeasible) {
    return "";
  }
  const items = state.infeasible
    .map(
      (entry) =>
        `<li>${escapeHtml(entry.label)} (${escapeHtml(entry.agreement_id)})</li>`,
    )
    .join("");
  return `<div class="panel panel-infeasible" role="alert">
  <h2>No plan satisfies every requirement</h2>
  <p>These requirements cannot be met under the current constraints:</p>
  <ul class="unsatisfiable">${items}</ul>
  <button data-action="undo">Undo last change</button>
</div>`;
}

function checkerSection(state: SessionState): string {
  const result = state.checker.result;
  let verdict = "";
  if (result) {
    const parts: string[] = [];
    if (result.excess > 0) parts.push(`${result.excess} excess`);
    if (result.missing > 0) parts.push(`${result.missing} missing`);
    const breakdown = parts.length > 0 ? ` (${parts.join(", ")})` : "";
    const excessCourses = excessIn(state, result);
    const highlight =
      excessCourses.length > 0
        ? `<p>Unnecessary: ${excessCourses
            .map((course) => `<mark class="excess">${escapeHtml(course)}</mark>`)
            .join(", ")}</p>`
        : "";
    verdict = `<p class="verdict">${result.total} mistake${result.total === 1 ? "" : "s"}${breakdown}</p>${highlight}`;
  }
  const error = state.checker.error
    ? `<p class="checker-error" role="alert">${escapeHtml(state.checker.error)}</p>`
    : "";
  return `<section class="plan-checker">
  <h2>Check your own plan</h2>
  <input type="text" data-action="checker-input" placeholder="ENG 200, HIST 70"
         value="${escapeHtml(state.checker.input)}">
  <button data-action="check-plan">Check</button>
  ${error}
  ${verdict}
</section>`;
}

/** Courses the user entered that the nearest optimal plan does not need. */
function excessIn(state: SessionState, result: ScoreResponse): string[] {
  const needed = new Set(result.nearest_optimum);
  return state.checker.input
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0 && !needed.has(part));
}

export function renderReportView(state: SessionState): string {
  const response = state.response;
  if (!response) {
    return `${errorBanner(state)}<p>No solve response yet.</p>`;
  }
  const report = response.report;
  const inputs = report.agreements
    .map(
      (agreement) =>
        `<li>${escapeHtml(agreement.institution)} – ${escapeHtml(agreement.major)}${agreement.kind === "major" ? " Major" : ""}</li>`,
    )
    .join("");
  const rows = report.rows.map((row) => renderRow(row, state)).join("\n");
  const [unitsMin, unitsMax] = report.total_units_range;
  const units =
    unitsMin === unitsMax ? `${unitsMin}` : `${unitsMin}–${unitsMax}`;
  const warning = response.unit_cap_warning
    ? `<div class="banner banner-warning" role="alert">Total units ${response.unit_cap_warning.total_units} exceed the ${response.unit_cap_warning.cap}-unit cap.</div>`
    : "";
  const explicit =
    !report.separable && report.explicit_optima
      ? `<section class="explicit-optima">
  <h2>Optimal plans (non-separable)</h2>
  <ol>${report.explicit_optima.map((plan) => `<li>${plan.map(escapeHtml).join(", ")}</li>`).join("")}</ol>
</section>`
      : "";
  const pendingNote = state.pending ? `<p class="pending">Re-solving…</p>` : "";
  return `${errorBanner(state)}
<section class="report-view">
  <button data-action="back">&larr; Change selection</button>
  <h1>Combined Articulation Report: ${escapeHtml(report.college)}</h1>
  <ul class="inputs-echo">${inputs}</ul>
  ${constraintChips(state)}
  ${infeasiblePanel(state)}
  ${pendingNote}
  <p class="totals">Optimal plan size: <strong>${report.opt_size}</strong> courses.
     Total units: <strong>${units}</strong>.</p>
  ${warning}
  <table class="report-rows">
    <thead>
      <tr><th>Row Instructions</th><th>Community College Course Option(s)</th><th>Course Satisfies Which Transfer Requirement(s)</th></tr>
    </thead>
    <tbody>
${rows}
    </tbody>
  </table>
  ${explicit}
  ${checkerSection(state)}
</section>`;
}

export function renderApp(state: SessionState): string {
  return state.screen === "selection"
    ? renderSelectionScreen(state)
    : renderReportView(state);
}

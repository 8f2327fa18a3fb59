/** DOM shell: event delegation over the rendered views, one ApiClient.
 *
 * This is the only file that touches the document; every other module is
 * pure and covered by the test suite.
 */

import { ApiClient, ApiError, CancelledError } from "./api.js";
import {
  SessionState,
  applyCheckerError,
  applyConstraint,
  applyError,
  applyInfeasible,
  applyScore,
  applySolve,
  backToSelection,
  beginSolve,
  checkerPlan,
  initialState,
  setCheckerInput,
  solveRequest,
  toggleAgreement,
  undoLastAction,
  withAgreements,
  ConstraintKind,
} from "./state.js";
import { renderApp } from "./views.js";

const API_BASE =
  new URLSearchParams(window.location.search).get("api") ??
  "http://127.0.0.1:8000";

const client = new ApiClient(API_BASE);
const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app container");
}

let state: SessionState = initialState();

function render(): void {
  root!.innerHTML = renderApp(state);
}

function update(next: SessionState): void {
  state = next;
  render();
}

async function loadAgreements(): Promise<void> {
  try {
    update(withAgreements(state, await client.agreements()));
  } catch (failure) {
    update(applyError(state, describe(failure)));
  }
}

function describe(failure: unknown): string {
  if (failure instanceof ApiError) {
    return failure.body.detail || failure.body.error;
  }
  return failure instanceof Error ? failure.message : String(failure);
}

async function resolve(): Promise<void> {
  update(beginSolve(state));
  try {
    const { raw, body } = await client.solve(solveRequest(state));
    void body;
    update(applySolve(state, raw));
  } catch (failure) {
    if (failure instanceof CancelledError) {
      return; // a newer solve supersedes this one
    }
    if (
      failure instanceof ApiError &&
      failure.status === 422 &&
      failure.body.unsatisfiable
    ) {
      update(applyInfeasible(state, failure.body.unsatisfiable));
      return;
    }
    update(applyError(state, describe(failure)));
  }
}

async function checkPlan(): Promise<void> {
  try {
    const result = await client.score({
      agreement_ids: state.selectedIds,
      plan: checkerPlan(state),
    });
    update(applyScore(state, result));
  } catch (failure) {
    update(applyCheckerError(state, describe(failure)));
  }
}

root.addEventListener("click", (event) => {
  const target = (event.target as HTMLElement).closest<HTMLElement>(
    "[data-action]",
  );
  if (!target) {
    return;
  }
  const action = target.dataset.action;
  const course = target.dataset.course ?? "";
  switch (action) {
    case "toggle-agreement":
      update(toggleAgreement(state, target.dataset.id ?? ""));
      break;
    case "solve":
      void resolve();
      break;
    case "pin":
    case "exclude":
    case "unpin":
    case "unexclude":
      update(applyConstraint(state, action as ConstraintKind, course));
      void resolve();
      break;
    case "undo":
      update(undoLastAction(state));
      void resolve();
      break;
    case "back":
      update(backToSelection(state));
      break;
    case "check-plan":
      void checkPlan();
      break;
    case "retry":
      if (state.screen === "selection" && state.agreements.length === 0) {
        void loadAgreements();
      } else {
        void resolve();
      }
      break;
  }
});

root.addEventListener("input", (event) => {
  const target = event.target as HTMLInputElement;
  if (target.dataset.action === "checker-input") {
    // keep state in sync without re-rendering (the input owns focus)
    state = setCheckerInput(state, target.value);
  }
});

render();
void loadAgreements();

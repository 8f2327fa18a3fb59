/** Serializable session state and its pure transitions.
 *
 * Every displayed number originates from an API response held here; the
 * transitions never derive plans locally. Pinned and excluded stay
 * disjoint, and all fields survive JSON round-trips so views can be
 * snapshot-tested without a browser.
 */

import type {
  AgreementInfo,
  ScoreResponse,
  SolveRequest,
  SolveResponse,
  UnsatisfiableRequirement,
} from "./types.js";

export type Screen = "selection" | "report";

export type ConstraintKind = "pin" | "exclude" | "unpin" | "unexclude";

export interface ConstraintAction {
  kind: ConstraintKind;
  course: string;
  /** Constraint sets before the action, for one-click undo. */
  previousPinned: string[];
  previousExcluded: string[];
}

export interface CheckerState {
  input: string;
  result: ScoreResponse | null;
  error: string | null;
}

export interface SessionState {
  screen: Screen;
  agreements: AgreementInfo[];
  selectedIds: string[];
  pinned: string[];
  excluded: string[];
  response: SolveResponse | null;
  /** Byte-exact body of the last successful solve. */
  responseRaw: string | null;
  pending: boolean;
  infeasible: UnsatisfiableRequirement[] | null;
  error: string | null;
  lastAction: ConstraintAction | null;
  checker: CheckerState;
  unitCap: number;
}

export function initialState(): SessionState {
  return {
    screen: "selection",
    agreements: [],
    selectedIds: [],
    pinned: [],
    excluded: [],
    response: null,
    responseRaw: null,
    pending: false,
    infeasible: null,
    error: null,
    lastAction: null,
    checker: { input: "", result: null, error: null },
    unitCap: 60,
  };
}

export function withAgreements(
  state: SessionState,
  agreements: AgreementInfo[],
): SessionState {
  return { ...state, agreements, error: null };
}

export function toggleAgreement(state: SessionState, id: string): SessionState {
  const selectedIds = state.selectedIds.includes(id)
    ? state.selectedIds.filter((existing) => existing !== id)
    : [...state.selectedIds, id];
  return { ...state, selectedIds };
}

export function beginSolve(state: SessionState): SessionState {
  return { ...state, pending: true, error: null };
}

export function applySolve(state: SessionState, raw: string): SessionState {
  return {
    ...state,
    screen: "report",
    response: JSON.parse(raw) as SolveResponse,
    responseRaw: raw,
    pending: false,
    infeasible: null,
    error: null,
  };
}

export function applyInfeasible(
  state: SessionState,
  unsatisfiable: UnsatisfiableRequirement[],
): SessionState {
  // constraints stay as the user set them; the panel offers undo
  return { ...state, pending: false, infeasible: unsatisfiable, error: null };
}

export function applyError(state: SessionState, message: string): SessionState {
  return { ...state, pending: false, error: message };
}

export function clearError(state: SessionState): SessionState {
  return { ...state, error: null };
}

function without(courses: string[], course: string): string[] {
  return courses.filter((existing) => existing !== course);
}

export function applyConstraint(
  state: SessionState,
  kind: ConstraintKind,
  course: string,
): SessionState {
  const action: ConstraintAction = {
    kind,
    course,
    previousPinned: state.pinned,
    previousExcluded: state.excluded,
  };
  let pinned = state.pinned;
  let excluded = state.excluded;
  switch (kind) {
    case "pin":
      pinned = pinned.includes(course) ? pinned : [...pinned, course];
      excluded = without(excluded, course);
      break;
    case "exclude":
      excluded = excluded.includes(course) ? excluded : [...excluded, course];
      pinned = without(pinned, course);
      break;
    case "unpin":
      pinned = without(pinned, course);
      break;
    case "unexclude":
      excluded = without(excluded, course);
      break;
  }
  return { ...state, pinned, excluded, lastAction: action };
}

export function undoLastAction(state: SessionState): SessionState {
  if (!state.lastAction) {
    return state;
  }
  return {
    ...state,
    pinned: state.lastAction.previousPinned,
    excluded: state.lastAction.previousExcluded,
    lastAction: null,
    infeasible: null,
  };
}

export function backToSelection(state: SessionState): SessionState {
  return { ...state, screen: "selection", infeasible: null };
}

export function setCheckerInput(
  state: SessionState,
  input: string,
): SessionState {
  return { ...state, checker: { ...state.checker, input } };
}

export function applyScore(
  state: SessionState,
  result: ScoreResponse,
): SessionState {
  return { ...state, checker: { ...state.checker, result, error: null } };
}

export function applyCheckerError(
  state: SessionState,
  error: string,
): SessionState {
  return { ...state, checker: { ...state.checker, result: null, error } };
}

/** Deterministic request body: sorted ids so equal states hit equal bytes. */
export function solveRequest(state: SessionState): SolveRequest {
  return {
    agreement_ids: state.selectedIds,
    pins: [...state.pinned].sort(),
    excludes: [...state.excluded].sort(),
    unit_cap: state.unitCap,
  };
}

export function checkerPlan(state: SessionState): string[] {
  return state.checker.input
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
}

/** Wire types for the planning API. These mirror the server's JSON bodies. */

export interface AgreementInfo {
  id: string;
  institution: string;
  major: string;
  year: string;
  kind: string;
}

export type RowInstruction = "COMPLETE_THIS" | "COMPLETE_ONE";

export interface ReportRow {
  instruction: RowInstruction;
  /** Option groups; each inner array is a conjunction of course ids. */
  options: string[][];
  /** (institution, major) pairs the row's courses count toward. */
  satisfies: [string, string][];
}

export interface ReportBody {
  college: string;
  agreements: { institution: string; major: string; year: string; kind: string }[];
  opt_size: number;
  rows: ReportRow[];
  separable: boolean;
  explicit_optima: string[][] | null;
  total_units_range: [number, number];
}

export interface UnitCapWarning {
  total_units: number;
  cap: number;
}

export interface SolveResponse {
  opt_size: number;
  forced: string[];
  canonical_plan: string[];
  all_optima: string[][];
  report: ReportBody;
  unit_cap_warning: UnitCapWarning | null;
}

export interface ScoreResponse {
  missing: number;
  excess: number;
  total: number;
  nearest_optimum: string[];
  unfulfilled: [string, string][];
}

export interface UnsatisfiableRequirement {
  agreement_id: string;
  requirement_id: string;
  label: string;
}

export interface ApiErrorBody {
  error: string;
  detail: string;
  unsatisfiable?: UnsatisfiableRequirement[];
}

export interface SolveRequest {
  agreement_ids: string[];
  pins: string[];
  excludes: string[];
  unit_cap: number;
}

export interface ScoreRequest {
  agreement_ids: string[];
  plan: string[];
}

// Payload shapes served by the /api/v1 endpoints.

export type StepStatus = "Locked" | "InProgress" | "Complete" | "Stale";

export interface StepInfo {
  step: number;
  title: string;
  status: StepStatus;
}

export interface ExitCheck {
  step: number;
  rule_id: string;
  description: string;
  satisfied: boolean;
  details: string;
}

export interface WorkflowState {
  current_step: number;
  steps: StepInfo[];
  checks: ExitCheck[];
}

export interface RankingRow {
  rank: number;
  threat_id: string;
  title: string;
  score_tenths: number;
  display: string;
  band: "High" | "Medium" | "Low";
  mitigated: boolean;
  excluded: boolean;
}

export interface Goal {
  id: string;
  description: string;
  source: string;
}

export interface Stakeholder {
  id: string;
  name: string;
  group: string;
  priority: "Critical" | "Major" | "Minor";
}

export interface Agreement {
  goal_id: string;
  stakeholder_id: string;
  verdict: "Agreed" | "Objected";
  note: string | null;
}

export interface Asset {
  id: string;
  name: string;
  description: string;
  cia: string[];
  priority: "Low" | "Medium" | "High";
  identified_by: string[];
}

export interface AttackPoint {
  id: string;
  kind: "PoA" | "PoB" | "PoC" | "PoD";
  name: string;
  description: string;
}

export interface Threat {
  id: string;
  title: string;
  description: string;
  stride: string[];
  asset_refs: string[];
  point_refs: string[];
  mitigated: boolean;
}

export interface Assessment {
  threat_id: string;
  method: "SimpleRisk" | "Dread";
  probability: number | null;
  damage_potential: number | null;
  dread_components: number[] | null;
  excluded: boolean;
  exclusion_rationale: string | null;
}

export interface Requirement {
  id: string;
  text: string;
  threat_refs: string[];
  origin: "Catalog" | "Manual";
  catalog_entry_id: string | null;
}

export interface ValidationRecord {
  requirement_id: string;
  reviewer: string;
  verdict: "Accepted" | "Rejected" | "NeedsRework";
  rationale: string | null;
}

export interface CoverageReport {
  assets_without_threats: string[];
  threats_without_points: string[];
  threats_without_requirements: string[];
  unvalidated_requirements: string[];
  orphan_points: string[];
}

export interface RequirementSuggestion {
  threat_id: string;
  entry_id: string;
  score: number;
  rank: number;
  title: string;
  requirement_text: string;
}

export interface SrsResult {
  checksum: string;
  generated_at: string;
  path: string;
  body: string;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details: Record<string, unknown>;
}

export interface ProjectSnapshot {
  project_id: string;
  name: string;
  goals: Goal[];
  stakeholders: Stakeholder[];
  agreements: Agreement[];
  assets: Asset[];
  attack_points: AttackPoint[];
  threats: Threat[];
  assessments: Assessment[];
  requirements: Requirement[];
  validations: ValidationRecord[];
}

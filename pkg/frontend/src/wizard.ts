// Wizard step metadata and the form-to-request mapping. Every submission
// maps to exactly one API request, so the builders return plain request
// descriptions that both the UI and the tests can execute.

import type { StepInfo } from "./types.js";

export interface ApiRequest {
  method: "GET" | "POST" | "PUT";
  path: string;
  body?: unknown;
}

export interface StepSpec {
  step: number;
  short: string;
  blurb: string;
}

export const STEPS: StepSpec[] = [
  { step: 1, short: "Goals", blurb: "Capture the system goals" },
  { step: 2, short: "Stakeholders", blurb: "Identify and prioritize stakeholders" },
  { step: 3, short: "Agreement", blurb: "Record agreement on every goal" },
  { step: 4, short: "Assets", blurb: "Identify assets with CIA facets and priority" },
  { step: 5, short: "Attack surface", blurb: "Points of attack, belief, conjecture, dependency" },
  { step: 6, short: "Threats", blurb: "Identify and STRIDE-categorize threats" },
  { step: 7, short: "Risk", blurb: "Score every threat and rank by risk" },
  { step: 8, short: "Requirements", blurb: "Elicit requirements from the dictionary" },
  { step: 9, short: "Validation", blurb: "Review every requirement" },
  { step: 10, short: "Document", blurb: "Generate the specification document" },
];

// Locked steps are visible but disabled; everything else is navigable.
export function isNavigable(steps: StepInfo[], step: number): boolean {
  const info = steps.find((s) => s.step === step);
  return info !== undefined && info.status !== "Locked";
}

export function addGoalRequest(id: string, description: string): ApiRequest {
  return { method: "POST", path: "/api/v1/goals", body: { id, description, source: "Interview" } };
}

export function addStakeholderRequest(
  id: string,
  name: string,
  group: string,
  priority: string,
): ApiRequest {
  return { method: "POST", path: "/api/v1/stakeholders", body: { id, name, group, priority } };
}

export function agreeRequest(goalId: string, stakeholderId: string): ApiRequest {
  return {
    method: "POST",
    path: "/api/v1/agreements",
    body: { goal_id: goalId, stakeholder_id: stakeholderId, verdict: "Agreed" },
  };
}

export function addAssetRequest(
  id: string,
  name: string,
  description: string,
  cia: string[],
  priority: string,
): ApiRequest {
  return {
    method: "POST",
    path: "/api/v1/assets",
    body: { id, name, description, cia, priority },
  };
}

export function addPointRequest(
  id: string,
  kind: string,
  name: string,
  description: string,
): ApiRequest {
  return { method: "POST", path: "/api/v1/points", body: { id, kind, name, description } };
}

export function addThreatRequest(threat: {
  id: string;
  title: string;
  description: string;
  stride: string[];
  asset_refs: string[];
  mitigated: boolean;
}): ApiRequest {
  return { method: "POST", path: "/api/v1/threats", body: threat };
}

export function setDreadRequest(threatId: string, components: number[]): ApiRequest {
  return {
    method: "PUT",
    path: `/api/v1/risk/${threatId}`,
    body: { method: "Dread", dread_components: components },
  };
}

export function setSimpleRequest(threatId: string, probability: number, damage: number): ApiRequest {
  return {
    method: "PUT",
    path: `/api/v1/risk/${threatId}`,
    body: { method: "SimpleRisk", probability, damage_potential: damage },
  };
}

export function elicitRequest(): ApiRequest {
  return { method: "POST", path: "/api/v1/elicit", body: {} };
}

// Accepting a suggestion is an explicit user action; the id is assigned by
// the service.
export function acceptSuggestionRequest(threatId: string, requirementText: string, entryId: string): ApiRequest {
  return {
    method: "POST",
    path: "/api/v1/requirements",
    body: {
      text: requirementText,
      threat_refs: [threatId],
      origin: "Catalog",
      catalog_entry_id: entryId,
    },
  };
}

export function validateRequest(requirementId: string, reviewer: string, verdict: string): ApiRequest {
  return {
    method: "POST",
    path: "/api/v1/validations",
    body: { requirement_id: requirementId, reviewer, verdict },
  };
}

export function completeStepRequest(step: number): ApiRequest {
  return { method: "POST", path: `/api/v1/workflow/${step}/complete` };
}

export function reopenStepRequest(step: number): ApiRequest {
  return { method: "POST", path: `/api/v1/workflow/${step}/reopen` };
}

export function generateSrsRequest(): ApiRequest {
  return { method: "POST", path: "/api/v1/document/srs", body: {} };
}

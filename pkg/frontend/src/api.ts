// Thin typed client for the service API. Every project change the UI makes
// goes through exactly one of these calls; nothing is computed locally
// except the explicitly-unsaved what-if preview.

import type {
  Agreement,
  ApiErrorBody,
  Asset,
  Assessment,
  AttackPoint,
  CoverageReport,
  Goal,
  ProjectSnapshot,
  RankingRow,
  Requirement,
  RequirementSuggestion,
  SrsResult,
  Stakeholder,
  Threat,
  ValidationRecord,
  WorkflowState,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

async function request<T>(
  base: string,
  method: string,
  path: string,
  body?: unknown,
): Promise<T> {
  const response = await fetch(base + path, {
    method,
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  if (!response.ok) {
    let parsed: ApiErrorBody;
    try {
      parsed = (await response.json()) as ApiErrorBody;
    } catch {
      parsed = { code: `Http${response.status}`, message: response.statusText, details: {} };
    }
    throw new ApiError(response.status, parsed);
  }
  return (await response.json()) as T;
}

export class Client {
  constructor(readonly base: string = "") {}

  private get<T>(path: string): Promise<T> {
    return request<T>(this.base, "GET", path);
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return request<T>(this.base, "POST", path, body);
  }

  project(): Promise<ProjectSnapshot> {
    return this.get("/api/v1/project");
  }

  workflow(): Promise<WorkflowState> {
    return this.get("/api/v1/workflow");
  }

  completeStep(step: number): Promise<WorkflowState> {
    return this.post(`/api/v1/workflow/${step}/complete`);
  }

  reopenStep(step: number): Promise<WorkflowState> {
    return this.post(`/api/v1/workflow/${step}/reopen`);
  }

  ranking(): Promise<RankingRow[]> {
    return this.get("/api/v1/risk/ranking");
  }

  goals(): Promise<Goal[]> {
    return this.get("/api/v1/goals");
  }

  addGoal(goal: Partial<Goal>): Promise<Goal> {
    return this.post("/api/v1/goals", goal);
  }

  stakeholders(): Promise<Stakeholder[]> {
    return this.get("/api/v1/stakeholders");
  }

  addStakeholder(entity: Partial<Stakeholder>): Promise<Stakeholder> {
    return this.post("/api/v1/stakeholders", entity);
  }

  agreements(): Promise<Agreement[]> {
    return this.get("/api/v1/agreements");
  }

  addAgreement(entity: Partial<Agreement>): Promise<Agreement> {
    return this.post("/api/v1/agreements", entity);
  }

  assets(): Promise<Asset[]> {
    return this.get("/api/v1/assets");
  }

  addAsset(entity: Partial<Asset>): Promise<Asset> {
    return this.post("/api/v1/assets", entity);
  }

  points(): Promise<AttackPoint[]> {
    return this.get("/api/v1/points");
  }

  addPoint(entity: Partial<AttackPoint>): Promise<AttackPoint> {
    return this.post("/api/v1/points", entity);
  }

  acknowledgeEmptyPoints(kind: "PoC" | "PoD"): Promise<{ declared_empty: string }> {
    return this.post("/api/v1/points/acknowledgements", { kind });
  }

  threats(): Promise<Threat[]> {
    return this.get("/api/v1/threats");
  }

  addThreat(entity: Partial<Threat>): Promise<Threat> {
    return this.post("/api/v1/threats", entity);
  }

  setRisk(threatId: string, body: Partial<Assessment>): Promise<Assessment> {
    return request<Assessment>(this.base, "PUT", `/api/v1/risk/${threatId}`, body);
  }

  requirements(): Promise<Requirement[]> {
    return this.get("/api/v1/requirements");
  }

  addRequirement(entity: Partial<Requirement>): Promise<Requirement> {
    return this.post("/api/v1/requirements", entity);
  }

  validations(): Promise<ValidationRecord[]> {
    return this.get("/api/v1/validations");
  }

  addValidation(entity: Partial<ValidationRecord>): Promise<ValidationRecord> {
    return this.post("/api/v1/validations", entity);
  }

  elicit(): Promise<{ created: Requirement[]; needs_manual: string[] }> {
    return this.post("/api/v1/elicit", {});
  }

  coverage(): Promise<CoverageReport> {
    return this.get("/api/v1/reports/coverage");
  }

  suggestStride(text: string): Promise<{ stride: string[] }> {
    return this.get(`/api/v1/suggest/stride?text=${encodeURIComponent(text)}`);
  }

  suggestRequirements(threatId: string, limit = 3): Promise<RequirementSuggestion[]> {
    return this.get(`/api/v1/suggest/requirements/${threatId}?limit=${limit}`);
  }

  generateSrs(): Promise<SrsResult> {
    return this.post("/api/v1/document/srs", {});
  }
}

// Browser entry point: a single-page ten-step wizard over the service API.
// All state shown here is API state; the only local computation is the
// what-if ranking preview, which is clearly flagged and never persisted.

import { ApiError, Client } from "./api.js";
import { dreadTenths, formatTenths, bandOf, rankPreview, validateComponent } from "./ranking.js";
import type { PreviewEntry } from "./ranking.js";
import type { RankingRow, WorkflowState } from "./types.js";
import {
  STEPS,
  acceptSuggestionRequest,
  isNavigable,
} from "./wizard.js";
import {
  renderBlockingChecklist,
  renderChecks,
  renderCoverage,
  renderRankingTable,
  renderSrsPreview,
  renderStepBadges,
  renderStrideSuggestion,
  renderSuggestions,
  escapeHtml,
} from "./views.js";

const client = new Client("");

interface UiState {
  workflow: WorkflowState | null;
  viewStep: number;
  ranking: RankingRow[];
  notice: string;
  blocking: string;
  whatif: Map<string, number[]>;
}

const state: UiState = {
  workflow: null,
  viewStep: 1,
  ranking: [],
  notice: "",
  blocking: "",
  whatif: new Map(),
};

function $(selector: string): HTMLElement {
  const node = document.querySelector(selector);
  if (!node) throw new Error(`missing element ${selector}`);
  return node as HTMLElement;
}

async function refresh(): Promise<void> {
  state.workflow = await client.workflow();
  if (!isNavigable(state.workflow.steps, state.viewStep)) {
    state.viewStep = state.workflow.current_step;
  }
  try {
    state.ranking = await client.ranking();
  } catch {
    state.ranking = []; // assessments incomplete; panel stays empty
  }
  await render();
}

function noticeBar(): string {
  const notice = state.notice ? `<p class="notice">${escapeHtml(state.notice)}</p>` : "";
  return notice + state.blocking;
}

async function render(): Promise<void> {
  const workflow = state.workflow;
  if (!workflow) return;
  const spec = STEPS.find((s) => s.step === state.viewStep);
  const app = $("#app");
  const checks =
    state.viewStep === workflow.current_step
      ? renderChecks(workflow.checks)
      : "<p>Checks are evaluated on the current step.</p>";
  app.innerHTML = `
    ${renderStepBadges(workflow.steps, workflow.current_step)}
    ${noticeBar()}
    <section class="panel">
      <h2>Step ${state.viewStep}: ${spec ? escapeHtml(spec.blurb) : ""}</h2>
      <div id="step-body">${await stepBody(state.viewStep)}</div>
      <h3>Exit checks</h3>
      ${checks}
      <button id="complete-step" data-step="${workflow.current_step}">Complete step ${workflow.current_step}</button>
      <button id="reopen-step" data-step="${state.viewStep}">Reopen step ${state.viewStep}</button>
    </section>
    <aside class="panel">
      <h2>Live risk ranking</h2>
      <div id="ranking">${renderRankingTable(state.ranking)}</div>
      <div id="whatif"></div>
      <h2>Coverage</h2>
      <div id="coverage"></div>
    </aside>`;
  void client.coverage().then((report) => {
    $("#coverage").innerHTML = renderCoverage(report);
  });
  renderWhatif();
}

async function stepBody(step: number): Promise<string> {
  switch (step) {
    case 1: {
      const goals = await client.goals();
      const rows = goals
        .map((g) => `<tr><td>${escapeHtml(g.id)}</td><td>${escapeHtml(g.description)}</td></tr>`)
        .join("");
      return `<table>${rows}</table>
        <form id="goal-form">
          <input name="id" placeholder="G1" required>
          <input name="description" placeholder="Goal description" required>
          <button>Add goal</button>
        </form>`;
    }
    case 2: {
      const stakeholders = await client.stakeholders();
      const rows = stakeholders
        .map(
          (s) =>
            `<tr><td>${escapeHtml(s.id)}</td><td>${escapeHtml(s.name)}</td>` +
            `<td>${escapeHtml(s.group)}</td><td>${escapeHtml(s.priority)}</td></tr>`,
        )
        .join("");
      return `<table>${rows}</table>
        <form id="stakeholder-form">
          <input name="id" placeholder="SH1" required>
          <input name="name" placeholder="Name" required>
          <select name="group">
            <option>Managerial</option><option>Marketing</option>
            <option>InformationSystem</option><option selected>Other</option>
          </select>
          <select name="priority">
            <option>Critical</option><option>Major</option><option>Minor</option>
          </select>
          <button>Add stakeholder</button>
        </form>`;
    }
    case 3: {
      const agreements = await client.agreements();
      const rows = agreements
        .map(
          (a) =>
            `<tr><td>${escapeHtml(a.goal_id)}</td><td>${escapeHtml(a.stakeholder_id)}</td>` +
            `<td>${escapeHtml(a.verdict)}</td></tr>`,
        )
        .join("");
      return `<table>${rows}</table>
        <form id="agreement-form">
          <input name="goal_id" placeholder="G1" required>
          <input name="stakeholder_id" placeholder="SH1" required>
          <button>Record agreement</button>
        </form>`;
    }
    case 4: {
      const assets = await client.assets();
      const rows = assets
        .map(
          (a) =>
            `<tr><td>${escapeHtml(a.id)}</td><td>${escapeHtml(a.name)}</td>` +
            `<td>${escapeHtml(a.cia.join(""))}</td><td>${escapeHtml(a.priority)}</td></tr>`,
        )
        .join("");
      return `<table>${rows}</table>
        <form id="asset-form">
          <input name="id" placeholder="A1" required>
          <input name="name" placeholder="Name" required>
          <input name="cia" placeholder="C,I,A" required>
          <select name="priority"><option>Low</option><option selected>Medium</option><option>High</option></select>
          <button>Add asset</button>
        </form>`;
    }
    case 5: {
      const points = await client.points();
      const rows = points
        .map(
          (p) =>
            `<tr><td>${escapeHtml(p.id)}</td><td>${escapeHtml(p.kind)}</td>` +
            `<td>${escapeHtml(p.name)}</td></tr>`,
        )
        .join("");
      return `<table>${rows}</table>
        <form id="point-form">
          <input name="id" placeholder="PA1" required>
          <select name="kind"><option>PoA</option><option>PoB</option><option>PoC</option><option>PoD</option></select>
          <input name="name" placeholder="Name" required>
          <button>Add point</button>
        </form>
        <button class="ack" data-kind="PoC">Declare no PoC</button>
        <button class="ack" data-kind="PoD">Declare no PoD</button>`;
    }
    case 6: {
      const threats = await client.threats();
      const rows = threats
        .map(
          (t) =>
            `<tr><td>${escapeHtml(t.id)}</td><td>${escapeHtml(t.title)}</td>` +
            `<td>${escapeHtml(t.stride.join(""))}</td><td>${escapeHtml(t.asset_refs.join(", "))}</td></tr>`,
        )
        .join("");
      return `<table>${rows}</table>
        <form id="threat-form">
          <input name="id" placeholder="T1" required>
          <input name="title" placeholder="Title" required>
          <input name="description" placeholder="Description">
          <input name="stride" placeholder="S,T,R,I,D,E subset" required>
          <button type="button" id="suggest-stride">Suggest STRIDE</button>
          <span id="stride-hint"></span>
          <input name="assets" placeholder="A1,A2" required>
          <label><input type="checkbox" name="mitigated">mitigated</label>
          <button>Add threat</button>
        </form>`;
    }
    case 7: {
      const threats = await client.threats();
      const rows = threats
        .map((t) => {
          const current = state.whatif.get(t.id)?.join(",") ?? "";
          return (
            `<tr><td>${escapeHtml(t.id)}</td><td>${escapeHtml(t.title)}</td>` +
            `<td><input class="dread-input" data-threat="${escapeHtml(t.id)}" ` +
            `placeholder="d,r,e,a,d" value="${escapeHtml(current)}"></td>` +
            `<td><button class="save-risk" data-threat="${escapeHtml(t.id)}">Save</button></td></tr>`
          );
        })
        .join("");
      return `<p>Enter five DREAD components (0..10 each). Edits preview instantly; Save persists.</p>
        <table>${rows}</table>`;
    }
    case 8: {
      const requirements = await client.requirements();
      const threats = await client.threats();
      const rows = requirements
        .map(
          (r) =>
            `<tr><td>${escapeHtml(r.id)}</td><td>${escapeHtml(r.text)}</td>` +
            `<td>${escapeHtml(r.threat_refs.join(", "))}</td></tr>`,
        )
        .join("");
      const options = threats.map((t) => `<option>${escapeHtml(t.id)}</option>`).join("");
      return `<table>${rows}</table>
        <button id="run-elicit">Elicit from dictionary</button>
        <form id="suggest-form">
          <select name="threat">${options}</select>
          <button>Show suggestions</button>
        </form>
        <div id="suggestions"></div>`;
    }
    case 9: {
      const validations = await client.validations();
      const rows = validations
        .map(
          (v) =>
            `<tr><td>${escapeHtml(v.requirement_id)}</td><td>${escapeHtml(v.reviewer)}</td>` +
            `<td>${escapeHtml(v.verdict)}</td></tr>`,
        )
        .join("");
      return `<table>${rows}</table>
        <form id="validation-form">
          <input name="requirement_id" placeholder="SR1" required>
          <input name="reviewer" placeholder="SH1" required>
          <select name="verdict"><option>Accepted</option><option>Rejected</option><option>NeedsRework</option></select>
          <button>Record review</button>
        </form>`;
    }
    case 10:
      return `<button id="generate-srs">Generate document</button><div id="srs-preview"></div>`;
    default:
      return "";
  }
}

function renderWhatif(): void {
  const container = document.querySelector("#whatif");
  if (!container) return;
  if (state.whatif.size === 0) {
    container.innerHTML = "";
    return;
  }
  const byId = new Map(state.ranking.map((row) => [row.threat_id, row]));
  const entries: PreviewEntry[] = [];
  for (const row of state.ranking) {
    const edited = state.whatif.get(row.threat_id);
    let tenths = row.score_tenths;
    let unsaved = false;
    if (edited) {
      try {
        tenths = dreadTenths(edited);
        unsaved = true;
      } catch {
        return; // invalid input: field-level error already shown, no preview
      }
    }
    entries.push({ threatId: row.threat_id, title: row.title, tenths, unsaved });
  }
  const preview = rankPreview(entries);
  const rows: RankingRow[] = preview.map((entry, index) => ({
    rank: index + 1,
    threat_id: entry.threatId,
    title: entry.title,
    score_tenths: entry.tenths,
    display: formatTenths(entry.tenths),
    band: bandOf(entry.tenths),
    mitigated: byId.get(entry.threatId)?.mitigated ?? false,
    excluded: byId.get(entry.threatId)?.excluded ?? false,
  }));
  container.innerHTML = renderRankingTable(rows, true);
}

function formValues(form: HTMLFormElement): Record<string, string> {
  const data = new FormData(form);
  const out: Record<string, string> = {};
  data.forEach((value, key) => {
    out[key] = String(value);
  });
  return out;
}

async function act(action: () => Promise<unknown>): Promise<void> {
  state.notice = "";
  state.blocking = "";
  try {
    await action();
  } catch (error) {
    if (error instanceof ApiError) {
      if (error.body.code === "ExitChecksFailed" && state.workflow) {
        const failing = new Set((error.body.details.failing as string[]) ?? []);
        state.blocking = renderBlockingChecklist(
          state.workflow.checks.filter((c) => failing.has(c.rule_id)),
        );
      } else {
        state.notice = `${error.body.code}: ${error.body.message}`;
      }
    } else {
      state.notice = String(error);
    }
  }
  await refresh();
}

function wireEvents(): void {
  const app = $("#app");
  app.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const step = target.closest<HTMLElement>("button[data-step]");
    if (target.classList.contains("badge") || target.closest(".badge")) {
      const badge = target.closest<HTMLElement>(".badge");
      if (badge && !badge.hasAttribute("disabled")) {
        state.viewStep = Number(badge.dataset.step);
        void render();
      }
      return;
    }
    if (target.id === "complete-step" && step) {
      void act(() => client.completeStep(Number(step.dataset.step)));
    } else if (target.id === "reopen-step" && step) {
      void act(() => client.reopenStep(Number(step.dataset.step)));
    } else if (target.classList.contains("ack")) {
      const kind = target.dataset.kind as "PoC" | "PoD";
      void act(() => client.acknowledgeEmptyPoints(kind));
    } else if (target.id === "run-elicit") {
      void act(() => client.elicit());
    } else if (target.classList.contains("accept-suggestion")) {
      const request = acceptSuggestionRequest(
        target.dataset.threat ?? "",
        target.dataset.text ?? "",
        target.dataset.entry ?? "",
      );
      void act(() =>
        client.addRequirement(request.body as Parameters<typeof client.addRequirement>[0]),
      );
    } else if (target.classList.contains("save-risk")) {
      const threatId = target.dataset.threat ?? "";
      const edited = state.whatif.get(threatId);
      if (edited) {
        void act(async () => {
          await client.setRisk(threatId, { method: "Dread", dread_components: edited });
          state.whatif.delete(threatId);
        });
      }
    } else if (target.id === "generate-srs") {
      void act(async () => {
        const result = await client.generateSrs();
        await refresh();
        $("#srs-preview").innerHTML = renderSrsPreview(result.body, result.checksum);
      });
    } else if (target.id === "suggest-stride") {
      const form = document.querySelector<HTMLFormElement>("#threat-form");
      if (form) {
        const values = formValues(form);
        void client
          .suggestStride(`${values.title ?? ""} ${values.description ?? ""}`)
          .then((result) => {
            $("#stride-hint").innerHTML = renderStrideSuggestion(result.stride);
          });
      }
    }
  });

  app.addEventListener("input", (event) => {
    const target = event.target as HTMLInputElement;
    if (!target.classList.contains("dread-input")) return;
    const threatId = target.dataset.threat ?? "";
    const parts = target.value.split(",").map((part) => Number(part.trim()));
    target.classList.remove("invalid");
    target.title = "";
    if (target.value.trim() === "") {
      state.whatif.delete(threatId);
      renderWhatif();
      return;
    }
    const problem =
      parts.length !== 5
        ? "enter exactly five components"
        : parts.map(validateComponent).find((p) => p !== null) ?? null;
    if (problem) {
      target.classList.add("invalid");
      target.title = problem;
      return; // no preview update on invalid input
    }
    state.whatif.set(threatId, parts);
    renderWhatif();
  });

  app.addEventListener("submit", (event) => {
    const form = event.target as HTMLFormElement;
    event.preventDefault();
    const values = formValues(form);
    switch (form.id) {
      case "goal-form":
        void act(() => client.addGoal({ id: values.id, description: values.description, source: "Interview" }));
        break;
      case "stakeholder-form":
        void act(() => client.addStakeholder(values));
        break;
      case "agreement-form":
        void act(() =>
          client.addAgreement({
            goal_id: values.goal_id,
            stakeholder_id: values.stakeholder_id,
            verdict: "Agreed",
          }),
        );
        break;
      case "asset-form":
        void act(() =>
          client.addAsset({
            id: values.id,
            name: values.name,
            description: values.description ?? "",
            cia: (values.cia ?? "").split(",").map((part) => part.trim()).filter(Boolean),
            priority: values.priority as "Low" | "Medium" | "High",
          }),
        );
        break;
      case "point-form":
        void act(() =>
          client.addPoint({
            id: values.id,
            kind: values.kind as "PoA" | "PoB" | "PoC" | "PoD",
            name: values.name,
            description: "",
          }),
        );
        break;
      case "threat-form":
        void act(() =>
          client.addThreat({
            id: values.id,
            title: values.title,
            description: values.description ?? "",
            stride: (values.stride ?? "").split(",").map((part) => part.trim().toUpperCase()).filter(Boolean),
            asset_refs: (values.assets ?? "").split(",").map((part) => part.trim()).filter(Boolean),
            point_refs: [],
            mitigated: values.mitigated === "on",
          }),
        );
        break;
      case "suggest-form":
        void client.suggestRequirements(values.threat ?? "").then((suggestions) => {
          $("#suggestions").innerHTML = renderSuggestions(suggestions);
        });
        break;
      case "validation-form":
        void act(() =>
          client.addValidation({
            requirement_id: values.requirement_id,
            reviewer: values.reviewer,
            verdict: values.verdict as "Accepted" | "Rejected" | "NeedsRework",
          }),
        );
        break;
    }
  });
}

if (typeof document !== "undefined" && document.querySelector("#app")) {
  wireEvents();
  void refresh();
}

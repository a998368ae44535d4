// Pure HTML renderers. The ranking and step views render exactly what the
// service sent, in the order it sent it; re-sorting or re-scoring here would
// break the single-source-of-truth rule (the what-if preview is the one
// labelled exception).

import type {
  CoverageReport,
  ExitCheck,
  RankingRow,
  RequirementSuggestion,
  StepInfo,
} from "./types.js";
import { STEPS, isNavigable } from "./wizard.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderStepBadges(steps: StepInfo[], current: number): string {
  const badges = STEPS.map((spec) => {
    const info = steps.find((s) => s.step === spec.step);
    const status = info ? info.status : "Locked";
    const classes = ["badge", `status-${status.toLowerCase()}`];
    if (spec.step === current) classes.push("current");
    const disabled = !isNavigable(steps, spec.step) ? " disabled" : "";
    return (
      `<button class="${classes.join(" ")}" data-step="${spec.step}"${disabled}>` +
      `${spec.step}. ${escapeHtml(spec.short)}<span class="state">${status}</span></button>`
    );
  });
  return `<nav class="steps">${badges.join("")}</nav>`;
}

export function renderChecks(checks: ExitCheck[]): string {
  if (checks.length === 0) return "<p>No checks for this step.</p>";
  const items = checks.map((check) => {
    const mark = check.satisfied ? "ok" : "blocked";
    const details = check.details ? ` <small>${escapeHtml(check.details)}</small>` : "";
    return `<li class="check ${mark}" data-rule="${escapeHtml(check.rule_id)}">${
      check.satisfied ? "✓" : "✗"
    } ${escapeHtml(check.description)}${details}</li>`;
  });
  return `<ul class="checks">${items.join("")}</ul>`;
}

export function renderBlockingChecklist(failed: ExitCheck[]): string {
  const items = failed
    .map(
      (check) =>
        `<li data-rule="${escapeHtml(check.rule_id)}">${escapeHtml(check.description)}` +
        (check.details ? ` <small>${escapeHtml(check.details)}</small>` : "") +
        "</li>",
    )
    .join("");
  return `<div class="blocking"><strong>Cannot complete this step yet:</strong><ul>${items}</ul></div>`;
}

export function renderRankingTable(rows: RankingRow[], unsaved = false): string {
  const header =
    "<tr><th>Rank</th><th>ID</th><th>Threat</th><th>Risk</th><th>Band</th><th>Mitigated</th></tr>";
  const body = rows
    .map(
      (row) =>
        `<tr data-threat="${escapeHtml(row.threat_id)}"${row.excluded ? ' class="excluded"' : ""}>` +
        `<td>${row.rank}</td><td>${escapeHtml(row.threat_id)}</td>` +
        `<td>${escapeHtml(row.title)}</td><td class="score">${escapeHtml(row.display)}</td>` +
        `<td class="band-${row.band.toLowerCase()}">${row.band}</td>` +
        `<td>${row.mitigated ? "Yes" : "No"}</td></tr>`,
    )
    .join("");
  const banner = unsaved ? '<p class="unsaved">Preview only: unsaved scores</p>' : "";
  return `${banner}<table class="ranking">${header}${body}</table>`;
}

export function renderSuggestions(suggestions: RequirementSuggestion[]): string {
  if (suggestions.length === 0) return "<p>No dictionary matches; enter manually.</p>";
  const items = suggestions
    .map(
      (s) =>
        `<li><button class="accept-suggestion" data-threat="${escapeHtml(s.threat_id)}" ` +
        `data-entry="${escapeHtml(s.entry_id)}" data-text="${escapeHtml(s.requirement_text)}">` +
        `Accept</button> <em>#${s.rank} (score ${s.score})</em> ${escapeHtml(s.requirement_text)}</li>`,
    )
    .join("");
  return `<ul class="suggestions">${items}</ul>`;
}

export function renderStrideSuggestion(letters: string[]): string {
  if (letters.length === 0) return '<span class="stride-hint">no suggestion</span>';
  return `<span class="stride-hint">suggested: ${letters.join(", ")} (confirm or edit)</span>`;
}

export function renderCoverage(report: CoverageReport): string {
  const row = (label: string, ids: string[]) =>
    `<li>${escapeHtml(label)}: ${ids.length === 0 ? "none" : escapeHtml(ids.join(", "))}</li>`;
  return (
    '<ul class="coverage">' +
    row("Assets without threats", report.assets_without_threats) +
    row("Threats without attack points", report.threats_without_points) +
    row("Threats without requirements", report.threats_without_requirements) +
    row("Unvalidated requirements", report.unvalidated_requirements) +
    row("Attack points referenced by no threat", report.orphan_points) +
    "</ul>"
  );
}

export function renderSrsPreview(body: string, checksum: string): string {
  return (
    `<p class="checksum">checksum <code>${escapeHtml(checksum)}</code></p>` +
    `<pre class="srs">${escapeHtml(body)}</pre>`
  );
}

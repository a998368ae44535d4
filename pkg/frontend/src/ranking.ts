// Client-side copy of the service's risk arithmetic, used only for the
// explicitly-unsaved what-if preview. Same integer-tenths scale, same tie
// rule; the persisted ranking always comes from the service.

export interface PreviewEntry {
  threatId: string;
  title: string;
  tenths: number;
  unsaved: boolean;
}

export function validateComponent(value: number): string | null {
  if (!Number.isInteger(value)) return "must be a whole number";
  if (value < 0 || value > 10) return "must be between 0 and 10";
  return null;
}

export function dreadTenths(components: number[]): number {
  if (components.length !== 5) {
    throw new Error(`expected 5 components, got ${components.length}`);
  }
  for (const value of components) {
    const problem = validateComponent(value);
    if (problem) throw new Error(`component ${value} ${problem}`);
  }
  return 2 * components.reduce((a, b) => a + b, 0);
}

export function simpleTenths(probability: number, damage: number): number {
  for (const value of [probability, damage]) {
    if (!Number.isInteger(value) || value < 1 || value > 10) {
      throw new Error(`value ${value} must be an integer in 1..10`);
    }
  }
  return probability * damage;
}

export function formatTenths(tenths: number): string {
  return `${Math.trunc(tenths / 10)}.${tenths % 10}`;
}

export function bandOf(tenths: number): "High" | "Medium" | "Low" {
  if (tenths >= 70) return "High";
  if (tenths >= 40) return "Medium";
  return "Low";
}

export function numericId(threatId: string): number {
  const match = /(\d+)$/.exec(threatId);
  if (!match) throw new Error(`id ${threatId} has no numeric part`);
  return Number(match[1]);
}

// Score descending, ties by ascending numeric id; input order never matters.
export function rankPreview(entries: PreviewEntry[]): PreviewEntry[] {
  return [...entries].sort((a, b) => {
    if (a.tenths !== b.tenths) return b.tenths - a.tenths;
    return numericId(a.threatId) - numericId(b.threatId);
  });
}

import { describe, expect, it } from "vitest";

import {
  bandOf,
  dreadTenths,
  formatTenths,
  numericId,
  rankPreview,
  simpleTenths,
  validateComponent,
} from "../src/ranking.js";
import { DREAD_VECTORS, EXPECTED_RANKING, THREATS } from "./erp-fixture.js";

describe("tenths arithmetic", () => {
  it("dread is exactly twice the component sum", () => {
    expect(dreadTenths([10, 10, 10, 10, 10])).toBe(100);
    expect(dreadTenths([10, 9, 9, 9, 9])).toBe(92);
    expect(dreadTenths([0, 0, 0, 0, 0])).toBe(0);
  });

  it("simple risk is probability times damage", () => {
    expect(simpleTenths(5, 10)).toBe(50);
    expect(simpleTenths(1, 1)).toBe(1);
    expect(() => simpleTenths(0, 5)).toThrow();
  });

  it("formats one decimal place from integer tenths", () => {
    expect(formatTenths(100)).toBe("10.0");
    expect(formatTenths(92)).toBe("9.2");
    expect(formatTenths(5)).toBe("0.5");
  });

  it("bands partition the scale at 70 and 40", () => {
    expect(bandOf(70)).toBe("High");
    expect(bandOf(69)).toBe("Medium");
    expect(bandOf(40)).toBe("Medium");
    expect(bandOf(39)).toBe("Low");
  });

  it("rejects out-of-range components with a field-level message", () => {
    expect(validateComponent(11)).toMatch(/between 0 and 10/);
    expect(validateComponent(2.5)).toMatch(/whole number/);
    expect(validateComponent(7)).toBeNull();
    expect(() => dreadTenths([1, 2, 3, 4, 11])).toThrow();
  });
});

describe("preview ranking", () => {
  it("reproduces the service ranking for the bundled engagement data", () => {
    const entries = THREATS.map(([id, title]) => ({
      threatId: id,
      title,
      tenths: dreadTenths(DREAD_VECTORS[id]!),
      unsaved: false,
    }));
    const ranked = rankPreview(entries).map((entry) => [entry.threatId, entry.tenths]);
    expect(ranked).toEqual(EXPECTED_RANKING);
  });

  it("breaks ties by ascending numeric id", () => {
    const ranked = rankPreview([
      { threatId: "T9", title: "", tenths: 50, unsaved: true },
      { threatId: "T2", title: "", tenths: 50, unsaved: true },
      { threatId: "T10", title: "", tenths: 50, unsaved: true },
    ]);
    expect(ranked.map((entry) => entry.threatId)).toEqual(["T2", "T9", "T10"]);
  });

  it("moves an edited threat into a tie resolved by the id rule", () => {
    // Raising the lowest-ranked threat to the top score must slot it among
    // the existing leaders in id order.
    const entries = THREATS.map(([id, title]) => ({
      threatId: id,
      title,
      tenths: id === "T3" ? 100 : dreadTenths(DREAD_VECTORS[id]!),
      unsaved: id === "T3",
    }));
    const ranked = rankPreview(entries).map((entry) => entry.threatId);
    expect(ranked.slice(0, 4)).toEqual(["T1", "T3", "T5", "T10"]);
  });

  it("does not mutate its input", () => {
    const entries = [
      { threatId: "T2", title: "", tenths: 10, unsaved: false },
      { threatId: "T1", title: "", tenths: 90, unsaved: false },
    ];
    rankPreview(entries);
    expect(entries[0]!.threatId).toBe("T2");
  });

  it("extracts numeric ids", () => {
    expect(numericId("T12")).toBe(12);
    expect(() => numericId("abc")).toThrow();
  });
});

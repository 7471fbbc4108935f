/** Color scales: colorblind-safe sequential for difficulty, region tints
 * for the comparison quadrants. */

import type { QuadrantName } from "./types.js";

// viridis sampled at 5 steps, reordered light -> dark so level 1 is lightest
export const DIFFICULTY_COLORS: Record<number, string> = {
  1: "#fde725",
  2: "#5ec962",
  3: "#21918c",
  4: "#3b528b",
  5: "#440154",
};

export function difficultyColor(level: number): string {
  return DIFFICULTY_COLORS[level] ?? "#999999";
}

export const QUADRANT_POINT_COLORS: Record<QuadrantName, string> = {
  both_weak: "#d62728",
  both_strong: "#2ca02c",
  a_superior: "#1f77b4",
  b_superior: "#e6b800",
  moderate: "#7f7f7f",
};

export const QUADRANT_REGION_TINTS: Record<QuadrantName, string> = {
  both_weak: "#f6c8c8",
  both_strong: "#c9e7c9",
  a_superior: "#c6dcf0",
  b_superior: "#f5ecb8",
  moderate: "#ffffff",
};

/** Payload shapes of the /api/v1 endpoints the UI consumes. */

export interface DatasetMeta {
  name: string;
  n_users: number;
  n_items: number;
  n_interactions: number;
  sparsity: number;
  gini_user: number;
  gini_item: number;
  user_coldstart_risk: number;
  item_coldstart_risk: number;
  feedback: "Explicit" | "Implicit";
}

export interface MetricSpecInfo {
  metric: string;
  k: number;
}

export interface AlgorithmInfo {
  id: string;
  n_datasets: number;
  n_records: number;
  specs: MetricSpecInfo[];
}

export interface DifficultyEntry {
  dataset: string;
  score: number;
  level: number; // 1 (easiest) .. 5 (hardest)
}

export interface ProjectionPayload {
  metric: string;
  k: number;
  dataset_ids: string[];
  algorithm_ids: string[];
  coords: [number, number][];
  explained_variance_ratio: [number, number];
  loadings: number[][];
  column_means: number[];
  mean_performance: number[];
  difficulty: DifficultyEntry[];
}

export type QuadrantName =
  | "both_weak"
  | "both_strong"
  | "a_superior"
  | "b_superior"
  | "moderate";

export interface ComparePoint {
  dataset: string;
  x: number;
  y: number;
  class: QuadrantName;
}

export interface CompareThresholds {
  low_a: number;
  high_a: number;
  low_b: number;
  high_b: number;
}

export interface ComparePayload {
  metric: string;
  k: number;
  algo_a: string;
  algo_b: string;
  thresholds: CompareThresholds;
  points: ComparePoint[];
  excluded: string[];
}

export interface SelectionInfo {
  name: string;
  dataset_ids: string[];
  created_at: string;
  note: string | null;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

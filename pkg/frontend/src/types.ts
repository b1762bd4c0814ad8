/** Response shapes of the /api/v1 endpoints this UI consumes. */

export interface OddsBlock {
  x: number;
  y: number;
  denominator: number;
  p_without: number;
  p_with: number;
  threshold: number;
}

export interface OddsTextArtifact {
  preamble: string;
  line_withhold: string;
  line_share: string;
}

export interface SampleReportsArtifact {
  disclaimer: string;
  draws_withhold: number[];
  draws_share: number[];
  display_withhold: string[];
  display_share: string[];
  display_precision: number;
  seed: number;
}

export interface ExplainArtifacts {
  odds_text?: OddsTextArtifact;
  icon_array_svg?: string;
  sample_reports?: SampleReportsArtifact;
  control_text?: string;
}

export interface ScenarioDoc {
  question_text: string;
  sensitive_answer_label: string;
  setting: "optional" | "mandatory";
  adversary_label: string;
  output_noun: string;
  others_sensitive_count: number;
  consequence_text: string;
  action_share_label: string;
  action_withhold_label: string;
}

export interface ExplainResponse {
  schema_version: number;
  request: {
    scenario_id: string | null;
    scenario: ScenarioDoc;
    epsilon: number;
    prior_no: number;
    method: string | null;
    denominator: number;
    n_samples: number;
    seed: number;
  };
  odds: OddsBlock | null;
  artifacts: ExplainArtifacts;
}

export interface TableRow {
  epsilon: number;
  x: number;
  y: number;
  denominator: number;
  p_without: number;
  p_with: number;
}

export interface ScenarioSummary {
  id: string;
  question_text: string;
  adversary_label: string;
  setting: string;
  sensitive_answer_label: string;
  others_sensitive_count: number;
}

export interface ExtremePriorDetail {
  error: "extreme_prior";
  message: string;
  condition?: string;
}

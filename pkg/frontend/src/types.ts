// Wire types of the computation service. The UI never does evidential math
// itself: every number it shows is taken from these payloads verbatim and
// only display-rounded per RoundDigsNumber.

export interface RatingEntry {
  Lingvo: string;
  LBound: number;
  UBound: number;
}

export interface GroupEntry {
  GroupName: string;
  ExperCount: number;
}

export interface SourceDataDoc {
  ComponentNumber: number;
  IndicatorNumber: number;
  ExpGroupsNumber: number;
  EstimatesNumber: number;
  RoundDigsNumber: number;
  InterviewNumber: number;
  ComponentNames: string[];
  IndicatorNames: string[];
  ExpertGroupes: GroupEntry[];
  EstimateScale: RatingEntry[];
  InterviewRslt: RatingEntry[];
}

export interface FusionStep {
  step: number;
  left: string;
  right: string;
  conflict: number;
  agreement: number;
  k: number;
}

export interface Estimate {
  rank: number;
  lower: number;
  upper: number;
  term: string | null;
  mass: number;
  belief: number;
  plausibility: number;
}

export interface DiagramRow {
  lower: number;
  upper: number;
  source: string;
  mass: number;
  cumulative: number;
}

export interface ResultEntry {
  component_index: number;
  component: string;
  indicator_index: number;
  indicator: string;
  status: "ok" | "total_conflict";
  error?: { step: number; left: string; right: string; message: string };
  steps?: FusionStep[];
  estimates?: Estimate[];
  expectation?: { lower: number; upper: number };
  diagram?: DiagramRow[];
}

export interface RunReport {
  metadata: {
    semantics: string;
    normalization: string;
    fusion_order: string[];
    round_digits: number;
    generated_at?: string;
  };
  results: ResultEntry[];
}

export interface Violation {
  severity: string;
  field: string;
  message: string;
}

export interface ServiceError {
  error: string;
  message?: string;
  violations?: Violation[];
  failures?: { component: string; indicator: string; step: number }[];
  report?: RunReport;
}

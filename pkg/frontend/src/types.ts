// Wire types mirroring the session service's JSON responses.
// The UI never derives numbers from these; it renders them as delivered.

export type Phase =
  | "setup"
  | "voting"
  | "discussion"
  | "results"
  | "feedback"
  | "closed";

export interface FeatureSpec {
  name: string;
  kind: "continuous" | "binary" | "coded";
  direction?: "higher" | "lower";
  coding?: Record<string, number>;
}

export interface Alternative {
  id: string;
  [feature: string]: string | number;
}

export interface Participant {
  id: string;
  display_name: string;
  joined_at: string;
}

export interface EmotionScores {
  happy: number;
  angry: number;
  surprise: number;
  sad: number;
  fear: number;
}

export interface Comment {
  participant_id: string;
  alternative_id: string;
  text: string;
  timestamp: string;
  sentiment: number;
  emotions: EmotionScores;
  dominant_emotion: string | null;
}

export interface AlternativeResult {
  alternative_id: string;
  voting_score: number;
  total_sentiment: number;
  fuzzy_score: number;
  rank: number;
}

export interface Report {
  results: AlternativeResult[];
  winner: string;
  engine_fingerprint: string;
}

export interface FeedbackEntry {
  participant_id: string;
  agreement: number;
  confidence: number;
  value: number;
}

export interface Consensus {
  iqr: number;
  mean: number;
  level: "high" | "medium" | "low";
}

export interface Snapshot {
  session_id: string;
  phase: Phase;
  version: number;
  feature_specs: FeatureSpec[];
  alternatives: Alternative[];
  participants: Participant[];
  stances: Record<string, Record<string, number>>;
  comments: Comment[];
  report: Report | null;
  feedback: FeedbackEntry[];
  consensus: Consensus | null;
}

export interface ApiError {
  code: string;
  message: string;
}

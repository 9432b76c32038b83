// Typed client for the weighting service. Every endpoint answers with an
// envelope; the UI never computes weights itself, it only renders these
// responses.

export interface ApiError {
  code: string;
  message: string;
  field?: string;
}

export interface Envelope<T> {
  ok: boolean;
  result?: T;
  error?: ApiError;
}

export interface PcsDocument {
  criteria: string[];
  best: string;
  worst: string;
  best_to_others: Record<string, number>;
  others_to_worst: Record<string, number>;
  scale_max?: number;
}

export interface CaseDoc {
  kind: string;
  i: string | null;
  j: string | null;
  label: string;
}

export interface SolutionDoc {
  criteria: string[];
  weights: Record<string, number>;
  sigma: number;
  epsilon_star: number;
  case: CaseDoc;
  ci: number;
  cr: number | null;
}

export interface EpsilonPair {
  i: string;
  j: string;
  value: number;
}

export interface EpsilonsDoc {
  d1: string[];
  d2: string[];
  d3: string[];
  eps_single: Record<string, number>;
  eps_pair: EpsilonPair[];
  eta: number;
  pivot: CaseDoc;
}

export interface SolveResult {
  solution: SolutionDoc;
  epsilons: EpsilonsDoc;
  warnings: string[];
}

export interface SensitivityResult {
  mode: string;
  count: number;
  members?: PcsDocument[];
}

export interface BlockDoc {
  pcs?: PcsDocument;
  weights?: Record<string, number>;
}

export interface StudyDocument {
  categories: string[];
  drivers: Record<string, string[]>;
  experts: string[];
  category_input: Record<string, BlockDoc>;
  driver_input: Record<string, Record<string, BlockDoc>>;
  meta?: Record<string, unknown>;
}

export interface BlockReportDoc {
  expert: string;
  category: string | null;
  epsilon_star: number;
  ci: number;
  cr: number | null;
}

export interface AggregateResult {
  categories: string[];
  experts: string[];
  drivers: Record<string, string[]>;
  driver_order: string[];
  category_weights: Record<string, Record<string, number>>;
  local_weights: Record<string, Record<string, number>>;
  global_weights: Record<string, Record<string, number>>;
  final_weights: Record<string, number>;
  ranking: string[];
  blocks: BlockReportDoc[];
}

export type SensitivityMode = "worst" | "best" | "both";

/** One in-flight request per endpoint; a newer call aborts the older one. */
export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(private baseUrl = "") {}

  private async post<T>(path: string, body: unknown): Promise<Envelope<T>> {
    this.inflight.get(path)?.abort();
    const controller = new AbortController();
    this.inflight.set(path, controller);
    try {
      const response = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
      return (await response.json()) as Envelope<T>;
    } finally {
      if (this.inflight.get(path) === controller) this.inflight.delete(path);
    }
  }

  solve(pcs: PcsDocument): Promise<Envelope<SolveResult>> {
    return this.post<SolveResult>("/api/solve", pcs);
  }

  sensitivity(pcs: PcsDocument, mode: SensitivityMode): Promise<Envelope<SensitivityResult>> {
    return this.post<SensitivityResult>("/api/sensitivity", { pcs, mode });
  }

  aggregate(study: StudyDocument): Promise<Envelope<AggregateResult>> {
    return this.post<AggregateResult>("/api/aggregate", study);
  }
}

/** True for fetch aborts caused by a newer request superseding this one. */
export function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}

/** Thin typed client for the /api/v1 endpoints. */

import type {
  ExplainResponse,
  ExtremePriorDetail,
  ScenarioSummary,
  TableRow,
} from "./types.js";
import type { ExplorerState } from "./state.js";

export class ExtremePriorError extends Error {
  constructor(public detail: ExtremePriorDetail) {
    super(detail.message);
  }
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: unknown,
  ) {
    super(`API error ${status}`);
  }
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async get<T>(path: string, params: Record<string, string>): Promise<T> {
    const query = new URLSearchParams(params).toString();
    const response = await fetch(`${this.baseUrl}${path}?${query}`);
    if (response.status === 422) {
      const body = await response.json();
      throw new ExtremePriorError(body.detail as ExtremePriorDetail);
    }
    if (!response.ok) {
      throw new ApiError(response.status, await response.json().catch(() => null));
    }
    return (await response.json()) as T;
  }

  explain(state: ExplorerState): Promise<ExplainResponse> {
    const params: Record<string, string> = {
      epsilon: String(state.epsilon),
      prior: String(state.priorNo),
      seed: String(state.seed),
      scenario_id: state.scenarioId,
    };
    if (state.method !== "all") params.method = state.method;
    return this.get<ExplainResponse>("/api/v1/explain", params);
  }

  table(epsilons?: number[]): Promise<TableRow[]> {
    const params: Record<string, string> = {};
    if (epsilons !== undefined) params.epsilons = epsilons.join(",");
    return this.get<TableRow[]>("/api/v1/table", params);
  }

  scenarios(): Promise<ScenarioSummary[]> {
    return this.get<ScenarioSummary[]>("/api/v1/scenarios", {});
  }
}

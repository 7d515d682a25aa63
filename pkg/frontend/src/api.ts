/** Typed client for the analytics service. Stale responses are dropped by
 * snapshot hash: callers pass the hash they rendered for and discard
 * replies that no longer match the current one.
 */

import type {
  ApiErrorPayload,
  ComparePayload,
  DescriptorPayload,
  DetailPayload,
  DistributionPayload,
  ProjectionPayload,
  QueryConfigBody,
  RefinePayload,
  SearchPayload,
  SkylinePayload,
  SubspacePayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(public payload: ApiErrorPayload, public status: number) {
    super(payload.message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(body as ApiErrorPayload, response.status);
  }
  return body as T;
}

function post(body: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  };
}

export class Client {
  constructor(private base: string = "") {}

  listDatasets(): Promise<DescriptorPayload[]> {
    return request(`${this.base}/datasets`);
  }

  refine(datasetId: string, config: QueryConfigBody): Promise<RefinePayload> {
    return request(`${this.base}/datasets/${datasetId}/refine`, post(config));
  }

  skyline(hash: string): Promise<SkylinePayload> {
    return request(`${this.base}/snapshots/${hash}/skyline`);
  }

  projection(
    hash: string,
    seed: number,
    focus?: string | null,
  ): Promise<ProjectionPayload> {
    const focusPart = focus ? `&focus=${encodeURIComponent(focus)}` : "";
    return request(`${this.base}/snapshots/${hash}/projection?seed=${seed}${focusPart}`);
  }

  detail(hash: string, pointId: string): Promise<DetailPayload> {
    return request(
      `${this.base}/snapshots/${hash}/points/${encodeURIComponent(pointId)}/detail`,
    );
  }

  compare(hash: string, ids: string[]): Promise<ComparePayload> {
    return request(`${this.base}/snapshots/${hash}/compare`, post({ ids }));
  }

  search(hash: string, q: string): Promise<SearchPayload> {
    return request(
      `${this.base}/snapshots/${hash}/search?q=${encodeURIComponent(q)}`,
    );
  }

  distribution(
    hash: string,
    attribute: string,
    bins = 40,
  ): Promise<DistributionPayload> {
    return request(
      `${this.base}/snapshots/${hash}/attributes/${encodeURIComponent(attribute)}/distribution?bins=${bins}`,
    );
  }

  subspace(hash: string, attributes: string[]): Promise<SubspacePayload> {
    return request(
      `${this.base}/snapshots/${hash}/subspace`,
      post({ attributes }),
    );
  }
}

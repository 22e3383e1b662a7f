export interface Move {
  dir: "B" | "F";
  to: number;
}

export interface MovesResponse {
  moves: Move[];
  win: boolean;
}

export interface PuzzleResponse {
  values: number[];
  n: number;
  seed: number;
}

export interface SolveResponse {
  solvable: boolean;
  path: number[] | null;
  certificate: string | null;
}

export interface VerifyResponse {
  valid: boolean;
  reason: string | null;
}

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, init);
  const body = await res.json().catch(() => null);
  if (!res.ok) {
    const message =
      body && typeof body.error === "string" ? body.error : `HTTP ${res.status}`;
    throw new ApiError(res.status, message);
  }
  return body as T;
}

function post<T>(url: string, payload: unknown): Promise<T> {
  return request<T>(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
}

export interface Api {
  fetchPuzzle(n: number, solvable: boolean, seed: number): Promise<PuzzleResponse>;
  solve(values: number[]): Promise<SolveResponse>;
  moves(values: number[], position: number): Promise<MovesResponse>;
  verify(values: number[], path: number[]): Promise<VerifyResponse>;
}

// base is "" in the browser (same origin as the serving process); tests pass
// an absolute http://127.0.0.1:port prefix
export function createApi(base = ""): Api {
  return {
    fetchPuzzle(n, solvable, seed) {
      const params = new URLSearchParams({
        n: String(n),
        solvable: String(solvable),
        seed: String(seed),
      });
      return request<PuzzleResponse>(`${base}/api/puzzle?${params}`);
    },
    solve(values) {
      return post<SolveResponse>(`${base}/api/solve`, { values });
    },
    moves(values, position) {
      return post<MovesResponse>(`${base}/api/moves`, { values, position });
    },
    verify(values, path) {
      return post<VerifyResponse>(`${base}/api/verify`, { values, path });
    },
  };
}

/* tslint:disable */
/* eslint-disable */

/**
 * `m0(a) / a` for each listed `a` next to the predicted slope.
 */
export function asymptotic_ratios(d: number, n: number, a_values: string): string;

/**
 * Koszul, semistable and generic tight-closure bounds for constant degree
 * `a`; `n_values` reads like `3..8,10,11`.
 */
export function bound_table(d: number, a: number, n_values: string): string;

/**
 * `F(m)`, `F⁺(m)` and the Hilbert lower bound over `0..=Σa - d`, with
 * `m0` and the bounds derived from it. `degrees` is comma separated.
 */
export function froeberg_profile(d: number, degrees: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly asymptotic_ratios: (a: number, b: number, c: number, d: number) => [number, number];
    readonly bound_table: (a: number, b: number, c: number, d: number) => [number, number];
    readonly froeberg_profile: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;

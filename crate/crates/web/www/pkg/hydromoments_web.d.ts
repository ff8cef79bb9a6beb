/* tslint:disable */
/* eslint-disable */

/**
 * One moment as a full output record.
 */
export function moment(space: string, d: number, n: number, l: number, z: number, alpha: number, mode: string): string;

/**
 * `<r^α>` or `<p^α>` sampled at evenly spaced orders in `[lo, hi]`.
 * Orders outside the domain are reported with a null value.
 */
export function moment_curve(space: string, d: number, n: number, l: number, z: number, lo: number, hi: number, points: number): string;

/**
 * Radial probability densities in both spaces on grids covering the bulk.
 */
export function radial_density(d: number, n: number, l: number, z: number, points: number): string;

/**
 * All four uncertainty-type inequalities for one state. Bounds that do not
 * apply (for example Daubechies–Thakkar away from l = 0) are listed with
 * the reason in `skipped`.
 */
export function uncertainty_report(d: number, n: number, l: number, z: number, a: number, b: number, alpha: number, k: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly moment: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number];
    readonly moment_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number];
    readonly radial_density: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly uncertainty_report: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
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

export function fmt4(value: number | null | undefined): string {
  if (value === null || value === undefined) return "undefined";
  return value.toFixed(4);
}

/** Display convention only: the method itself sets no admissibility bands. */
export function crBand(cr: number | null): "green" | "amber" | "red" {
  if (cr === null) return "red";
  if (cr < 0.25) return "green";
  if (cr < 0.5) return "amber";
  return "red";
}

export function debounce<A extends unknown[]>(ms: number, fn: (...args: A) => void) {
  let handle: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (handle !== undefined) clearTimeout(handle);
    handle = setTimeout(() => fn(...args), ms);
  };
}

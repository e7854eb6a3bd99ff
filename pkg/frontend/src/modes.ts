// The function column: exactly one mode active at a time (radio semantics);
// switching modes resets any in-progress click flow.

export const MODES = [
  "point",
  "line",
  "circle",
  "sphere_cr",
  "sphere",
  "move",
  "s_int_l",
] as const;

export type UiMode = (typeof MODES)[number];

/** Parent points each selection flow must collect before it fires. */
export const SELECTION_TARGETS: Partial<Record<UiMode, number>> = {
  line: 2,
  circle: 3,
  sphere: 4,
};

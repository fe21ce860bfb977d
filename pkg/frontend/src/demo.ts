import type { InputDocument } from './types.js';

/** Starting document: the same octagon loop the CLI uses as its built-in demo. */
export function demoDocument(): InputDocument {
  return {
    format: 1,
    closed: true,
    couples: [
      { p: [1.15, 0.0], alpha: 1.770796 },
      { p: [0.671751, 0.671751], alpha: 2.006194 },
      { p: [0.0, 1.3], alpha: 3.441593 },
      { p: [-0.742462, 0.742462], alpha: 3.776991 },
      { p: [-0.8, 0.0], alpha: 4.312389 },
      { p: [-0.848528, -0.848528], alpha: 5.747787 },
      { p: [0.0, -1.0], alpha: 6.083185 },
      { p: [0.636396, -0.636396], alpha: 7.168583 },
    ],
    scheme: { scheme: 'lr2', levels: 5 },
  };
}

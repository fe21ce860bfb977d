import { describe, expect, it } from 'vitest';

import { demoDocument } from '../src/demo.js';
import { alphaFromNormal, wrapAngle } from '../src/geometry.js';
import {
  OMEGA_DETENT,
  OMEGA_MAX,
  OMEGA_MIN,
  addCouple,
  collapsedSecant,
  deleteCouple,
  dragNormal,
  dragPoint,
  exportDocument,
  importDocument,
  initialState,
  pushHistory,
  schemeFromDocument,
  sendable,
  setScheme,
  snapOmega,
  toRequestBody,
  undo,
} from '../src/state.js';

const PI = Math.PI;

function freshState() {
  return initialState(demoDocument());
}

describe('normal handle angles', () => {
  it('maps the upward normal to a horizontal tangent', () => {
    expect(alphaFromNormal(0, 1)).toBe(0);
  });

  it('maps the leftward normal to alpha = pi/2', () => {
    expect(alphaFromNormal(-1, 0)).toBeCloseTo(PI / 2, 12);
  });

  it('is invariant under handle length', () => {
    expect(alphaFromNormal(0.3, 0.4)).toBeCloseTo(alphaFromNormal(3, 4)!, 12);
  });

  it('rejects a zero direction', () => {
    expect(alphaFromNormal(0, 0)).toBeNull();
  });

  it('flipping the handle 180 degrees flips the tangent', () => {
    const a = alphaFromNormal(2, 1)!;
    const b = alphaFromNormal(-2, -1)!;
    expect(Math.abs(wrapAngle(b - a))).toBeCloseTo(PI, 12);
  });
});

describe('dragNormal', () => {
  it('updates alpha through the normal direction', () => {
    const s = dragNormal(freshState(), 0, 0, 1);
    expect(s.document.couples[0].alpha).toBe(0);
  });

  it('ignores a zero-length drag', () => {
    const s = freshState();
    expect(dragNormal(s, 3, 0, 0)).toBe(s);
  });

  it('leaves every other couple untouched', () => {
    const s = freshState();
    const next = dragNormal(s, 2, 1, 1);
    for (let i = 0; i < s.document.couples.length; i += 1) {
      if (i === 2) continue;
      expect(next.document.couples[i]).toEqual(s.document.couples[i]);
    }
  });
});

describe('dragPoint and the collapsed-secant guard', () => {
  it('moves the point', () => {
    const s = dragPoint(freshState(), 1, 9, -3);
    expect(s.document.couples[1].p).toEqual([9, -3]);
    expect(s.invalidIndex).toBeNull();
    expect(sendable(s)).toBe(true);
  });

  it('dragging onto the next couple flags the pair and blocks sending', () => {
    const base = freshState();
    const target = base.document.couples[1].p;
    const s = dragPoint(base, 0, target[0], target[1]);
    expect(s.invalidIndex).toBe(0);
    expect(s.warning).toContain('coincide');
    expect(sendable(s)).toBe(false);
  });

  it('detects the closing secant of a loop', () => {
    const base = freshState();
    const n = base.document.couples.length;
    const first = base.document.couples[0].p;
    const s = dragPoint(base, n - 1, first[0], first[1]);
    expect(s.invalidIndex).toBe(n - 1);
  });

  it('moving away again clears the flag', () => {
    const base = freshState();
    const target = base.document.couples[1].p;
    const bad = dragPoint(base, 0, target[0], target[1]);
    const good = dragPoint(bad, 0, target[0] + 1, target[1]);
    expect(good.invalidIndex).toBeNull();
    expect(good.warning).toBeNull();
  });

  it('an open document ignores the wrap pair', () => {
    const doc = demoDocument();
    doc.closed = false;
    const last = doc.couples.length - 1;
    doc.couples[last].p = [...doc.couples[0].p];
    expect(collapsedSecant(doc)).toBeNull();
  });
});

describe('scheme controls', () => {
  it('switching schemes preserves the document object exactly', () => {
    const s = freshState();
    const next = setScheme(s, { ...s.scheme, kind: 'fourpoint' });
    expect(next.document).toBe(s.document);
  });

  it('adopts the scheme block of the loaded document', () => {
    const controls = schemeFromDocument(demoDocument());
    expect(controls.kind).toBe('lr');
    expect(controls.n).toBe(2);
    expect(controls.levels).toBe(5);
  });

  it('snapOmega clamps into [-1/4, 0)', () => {
    expect(snapOmega(-2)).toBe(OMEGA_MIN);
    expect(snapOmega(0.3)).toBe(OMEGA_MAX);
    expect(snapOmega(-0.1)).toBe(-0.1);
  });

  it('snapOmega has a detent at -1/18', () => {
    expect(snapOmega(-0.054)).toBe(OMEGA_DETENT);
    expect(snapOmega(OMEGA_DETENT + 0.004)).toBe(OMEGA_DETENT);
    expect(snapOmega(-0.07)).toBe(-0.07);
  });

  it('request bodies carry omega only for the four-point scheme', () => {
    const s = freshState();
    const lr = toRequestBody(setScheme(s, { ...s.scheme, kind: 'lr', n: 3 }));
    expect(lr.scheme).toBe('lr3');
    expect(lr.omega).toBeUndefined();
    const fp = toRequestBody(setScheme(s, { ...s.scheme, kind: 'fourpoint', omega: -0.1 }));
    expect(fp.scheme).toBe('fourpoint');
    expect(fp.omega).toBe(-0.1);
  });

  it('request bodies clone the document instead of aliasing it', () => {
    const s = freshState();
    const body = toRequestBody(s);
    expect(body.input).not.toBe(s.document);
    expect(body.input.couples).toEqual(s.document.couples);
  });
});

describe('editing and undo', () => {
  it('addCouple appends and points the tangent along the new secant', () => {
    // The demo's last couple sits at y = -0.636396; adding at the same
    // height makes the incoming secant horizontal.
    const s = addCouple(freshState(), 10, -0.636396);
    const couples = s.document.couples;
    const added = couples[couples.length - 1];
    expect(added.p).toEqual([10, -0.636396]);
    expect(added.alpha).toBeCloseTo(0, 12);
    expect(s.selection).toBe(couples.length - 1);
  });

  it('deleteCouple refuses to go below two couples', () => {
    let s = initialState({
      format: 1,
      closed: false,
      couples: [
        { p: [0, 0], alpha: 0 },
        { p: [1, 0], alpha: 0 },
      ],
    });
    s = deleteCouple(s, 0);
    expect(s.document.couples).toHaveLength(2);
    expect(s.warning).toContain('at least two');
  });

  it('undo restores the snapshot taken before the gesture', () => {
    const s0 = freshState();
    const before = JSON.stringify(s0.document);
    let s = pushHistory(s0);
    s = dragPoint(s, 0, 50, 50);
    s = dragPoint(s, 0, 60, 60);
    s = undo(s);
    expect(JSON.stringify(s.document)).toBe(before);
    expect(s.history).toHaveLength(0);
  });

  it('undo on an empty history is a no-op', () => {
    const s = freshState();
    expect(undo(s)).toBe(s);
  });
});

describe('import and export', () => {
  it('round-trips the current document', () => {
    const s = freshState();
    const doc = importDocument(exportDocument(s));
    expect(doc).toEqual(s.document);
  });

  it('converts normal-encoded couples on import', () => {
    const doc = importDocument(
      JSON.stringify({
        format: 1,
        closed: false,
        couples: [
          { p: [0, 0], normal: [0, 2] },
          { p: [1, 0], alpha: 0.5 },
        ],
      }),
    );
    expect(doc.couples[0].alpha).toBe(0);
    expect(doc.couples[1].alpha).toBe(0.5);
  });

  it('rejects text that is not JSON', () => {
    expect(() => importDocument('{')).toThrow('not valid JSON');
  });

  it('rejects documents without enough couples', () => {
    expect(() => importDocument('{"couples": [{"p": [0, 0], "alpha": 0}]}')).toThrow(
      'at least two',
    );
  });

  it('rejects couples without a usable angle', () => {
    const text = JSON.stringify({
      couples: [
        { p: [0, 0], normal: [0, 0] },
        { p: [1, 0], alpha: 0 },
      ],
    });
    expect(() => importDocument(text)).toThrow('couple 0');
  });

  it('rejects non-numeric points', () => {
    const text = JSON.stringify({
      couples: [
        { p: [0, 'x'], alpha: 0 },
        { p: [1, 0], alpha: 0 },
      ],
    });
    expect(() => importDocument(text)).toThrow('bad point');
  });
});

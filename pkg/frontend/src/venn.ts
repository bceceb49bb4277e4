import type { VennJson } from './types.js';

// Fixed circle layouts for one to three atoms. Region shading works by
// nesting one mask per atom: "inside the circle" or "outside the circle",
// so each true region is the intersection the bitmask describes.

type Circle = { cx: number; cy: number; r: number };

const LAYOUTS: Record<number, { width: number; height: number; circles: Circle[] }> = {
  1: { width: 120, height: 110, circles: [{ cx: 60, cy: 55, r: 38 }] },
  2: {
    width: 200,
    height: 120,
    circles: [
      { cx: 75, cy: 60, r: 45 },
      { cx: 125, cy: 60, r: 45 },
    ],
  },
  3: {
    width: 210,
    height: 180,
    circles: [
      { cx: 80, cy: 70, r: 45 },
      { cx: 130, cy: 70, r: 45 },
      { cx: 105, cy: 113, r: 45 },
    ],
  },
};

let uid = 0;

export function vennSvg(v: VennJson): string {
  const layout = LAYOUTS[v.atoms.length];
  if (!layout) {
    return '';
  }
  uid += 1;
  const prefix = `venn${uid}`;
  const { width, height, circles } = layout;

  const masks: string[] = [];
  circles.forEach((c, i) => {
    masks.push(
      `<mask id="${prefix}-in${i}">` +
        `<rect width="${width}" height="${height}" fill="black"/>` +
        `<circle cx="${c.cx}" cy="${c.cy}" r="${c.r}" fill="white"/>` +
        `</mask>`,
      `<mask id="${prefix}-out${i}">` +
        `<rect width="${width}" height="${height}" fill="white"/>` +
        `<circle cx="${c.cx}" cy="${c.cy}" r="${c.r}" fill="black"/>` +
        `</mask>`,
    );
  });

  const shaded: string[] = [];
  for (const [key, truth] of Object.entries(v.regions)) {
    if (!truth) {
      continue;
    }
    const mask = Number(key);
    let element = `<rect width="${width}" height="${height}" fill="#9db8dd" opacity="0.75"/>`;
    for (let i = circles.length - 1; i >= 0; i -= 1) {
      const side = mask & (1 << i) ? 'in' : 'out';
      element = `<g mask="url(#${prefix}-${side}${i})">${element}</g>`;
    }
    shaded.push(element);
  }

  const outlines = circles
    .map((c) => `<circle cx="${c.cx}" cy="${c.cy}" r="${c.r}" fill="none" stroke="#1c2330"/>`)
    .join('');
  const labels = circles
    .map((c, i) => {
      const dx = c.cx < width / 2 ? -c.r - 4 : c.r + 4;
      const anchor = dx < 0 ? 'end' : 'start';
      return (
        `<text x="${c.cx + dx}" y="${c.cy - c.r / 2}" text-anchor="${anchor}" ` +
        `font-size="12">${v.atoms[i]}</text>`
      );
    })
    .join('');

  return (
    `<svg class="venn" viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg">` +
    `<defs>${masks.join('')}</defs>${shaded.join('')}${outlines}${labels}</svg>`
  );
}

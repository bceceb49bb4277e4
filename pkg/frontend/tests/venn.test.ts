import { describe, expect, it } from 'vitest';
import { vennSvg } from '../src/venn.js';

describe('vennSvg', () => {
  it('shades exactly the true regions', () => {
    const svg = vennSvg({
      atoms: ['p', 'q'],
      regions: { '0': false, '1': false, '2': false, '3': true },
    });
    const holder = document.createElement('div');
    holder.innerHTML = svg;
    expect(holder.querySelectorAll('circle[fill="none"]').length).toBe(2);
    // one region, masked once per atom
    expect(holder.querySelectorAll('g[mask]').length).toBe(2);
    expect(holder.querySelectorAll('text').length).toBe(2);
  });

  it('handles the outside-everything region', () => {
    const svg = vennSvg({ atoms: ['p'], regions: { '0': true, '1': false } });
    const holder = document.createElement('div');
    holder.innerHTML = svg;
    const shades = holder.querySelectorAll('g[mask]');
    expect(shades.length).toBe(1);
    expect(shades[0].getAttribute('mask')).toContain('-out0');
  });

  it('returns nothing for more than three atoms', () => {
    expect(vennSvg({ atoms: ['a', 'b', 'c', 'd'], regions: {} })).toBe('');
  });
});

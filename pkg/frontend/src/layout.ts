/**
 * Deterministic force layout. The visual model carries no geometry, so
 * positions are computed client-side: nodes start on a circle (ordered by
 * id) and settle under spring forces along edges, pairwise repulsion and a
 * weak centering pull. No randomness; the same graph always lands in the
 * same arrangement.
 */

export interface Point {
  x: number;
  y: number;
}

export interface LayoutInput {
  id: string;
}

export interface LayoutEdge {
  from: string;
  to: string;
}

export function computeLayout(
  nodes: readonly LayoutInput[],
  edges: readonly LayoutEdge[],
  width: number,
  height: number,
  iterations = 250,
): Map<string, Point> {
  const ids = [...new Set(nodes.map((n) => n.id))].sort();
  const positions = new Map<string, Point>();
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 3;
  ids.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / Math.max(ids.length, 1);
    positions.set(id, {
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
    });
  });
  if (ids.length <= 1) return positions;

  const k = Math.sqrt((width * height) / ids.length) / 2;
  const springLength = k;
  let temperature = Math.min(width, height) / 10;
  const cooling = 0.95;

  for (let step = 0; step < iterations; step++) {
    const forces = new Map<string, Point>(ids.map((id) => [id, { x: 0, y: 0 }]));

    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        const a = positions.get(ids[i]!)!;
        const b = positions.get(ids[j]!)!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 0.01) {
          // deterministic nudge for coincident points
          dx = 0.1 * (i - j);
          dy = 0.1;
          d2 = dx * dx + dy * dy;
        }
        const d = Math.sqrt(d2);
        const repulsion = (k * k) / d;
        const fa = forces.get(ids[i]!)!;
        const fb = forces.get(ids[j]!)!;
        fa.x += (dx / d) * repulsion;
        fa.y += (dy / d) * repulsion;
        fb.x -= (dx / d) * repulsion;
        fb.y -= (dy / d) * repulsion;
      }
    }

    for (const edge of edges) {
      const a = positions.get(edge.from);
      const b = positions.get(edge.to);
      if (a === undefined || b === undefined || edge.from === edge.to) continue;
      const dx = a.x - b.x;
      const dy = a.y - b.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 0.1);
      const attraction = (d - springLength) / 4;
      const fa = forces.get(edge.from)!;
      const fb = forces.get(edge.to)!;
      fa.x -= (dx / d) * attraction;
      fa.y -= (dy / d) * attraction;
      fb.x += (dx / d) * attraction;
      fb.y += (dy / d) * attraction;
    }

    for (const id of ids) {
      const p = positions.get(id)!;
      const f = forces.get(id)!;
      f.x += (cx - p.x) / 50;
      f.y += (cy - p.y) / 50;
      const magnitude = Math.sqrt(f.x * f.x + f.y * f.y);
      const limited = Math.min(magnitude, temperature);
      if (magnitude > 0.001) {
        p.x += (f.x / magnitude) * limited;
        p.y += (f.y / magnitude) * limited;
      }
      p.x = Math.min(Math.max(p.x, 20), width - 20);
      p.y = Math.min(Math.max(p.y, 20), height - 20);
    }
    temperature = Math.max(temperature * cooling, 0.5);
  }
  return positions;
}

/** Stock polygons reachable from the toolbar. Generator presets are built by
 * the service; document presets load fixed canonical text. */

export interface GeneratorPreset {
  id: string;
  label: string;
  kind: "generator";
  x: string;
  y: string;
  sigma: string;
}

export interface DocumentPreset {
  id: string;
  label: string;
  kind: "document";
  doc: string;
}

export type Preset = GeneratorPreset | DocumentPreset;

export const PRESETS: Preset[] = [
  {
    id: "fig2-start",
    label: "Pop sequence start (6 vertices)",
    kind: "generator",
    x: "2,3,1",
    y: "3,2,1",
    sigma: "++---+",
  },
  {
    id: "p1-k4",
    label: "P1, k=4 (simple)",
    kind: "generator",
    x: "4,3,2,1",
    y: "4,3,2,1",
    sigma: "++------",
  },
  {
    id: "p2-k3",
    label: "P2, k=3 (self-intersecting)",
    kind: "generator",
    x: "3,2,1",
    y: "3,2,1",
    sigma: "++++++",
  },
  {
    id: "k2-convex",
    label: "Convex witness, k=2",
    kind: "generator",
    x: "2,1",
    y: "2,1",
    sigma: "++--",
  },
  {
    id: "hairpin-demo",
    label: "Hairpin demo (pop undefined at p1, p3)",
    kind: "document",
    doc: '{"format_version":"1","vertices":[["0","0"],["1","0"],["2","1"],["1","0"]]}\n',
  },
];

export function findPreset(id: string): Preset | undefined {
  return PRESETS.find((p) => p.id === id);
}

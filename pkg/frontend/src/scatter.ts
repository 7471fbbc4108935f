/** Minimal SVG scatter plumbing: linear scales and an axis-framed canvas. */

import { svgEl } from "./dom.js";

export interface Scale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  return scale;
}

export function padDomain(values: number[], pad = 0.08): [number, number] {
  if (!values.length) return [0, 1];
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const margin = (hi - lo) * pad;
  return [lo - margin, hi + margin];
}

export interface Canvas {
  svg: SVGSVGElement;
  plot: SVGGElement;
  width: number;
  height: number;
}

export function makeCanvas(width: number, height: number, labelX: string, labelY: string): Canvas {
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    class: "scatter",
  });
  const plot = svgEl("g", { class: "plot" });
  svg.append(
    svgEl("rect", { x: 0, y: 0, width, height, fill: "#fcfcfc", stroke: "#ddd" }),
    plot,
    svgEl("text", { x: width / 2, y: height - 4, "text-anchor": "middle", class: "axis-label" }, [labelX]),
    svgEl("text", {
      x: 10,
      y: height / 2,
      "text-anchor": "middle",
      class: "axis-label",
      transform: `rotate(-90 10 ${height / 2})`,
    }, [labelY]),
  );
  return { svg, plot, width, height };
}

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { DebouncedEvaluator, EVALUATE_INTERVAL_MS } from "../src/debounce.js";

async function flushMicrotasks(): Promise<void> {
  for (let i = 0; i < 8; i += 1) {
    await Promise.resolve();
  }
}

describe("DebouncedEvaluator", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("coalesces a burst of edits into one request carrying the newest value", async () => {
    const send = vi.fn(async (arg: number) => arg);
    const delivered: number[] = [];
    const evaluator = new DebouncedEvaluator(send, (r) => delivered.push(r));

    for (let k = 0; k < 10; k += 1) {
      evaluator.schedule(k);
      await vi.advanceTimersByTimeAsync(10);
    }
    await vi.advanceTimersByTimeAsync(EVALUATE_INTERVAL_MS * 2);

    expect(send).toHaveBeenCalledTimes(1);
    expect(send).toHaveBeenCalledWith(9);
    expect(delivered).toEqual([9]);
  });

  it("never sends faster than the throttle window under sustained editing", async () => {
    const sendTimes: number[] = [];
    const send = vi.fn(async (arg: number) => {
      sendTimes.push(Date.now());
      return arg;
    });
    const delivered: number[] = [];
    const evaluator = new DebouncedEvaluator(send, (r) => delivered.push(r));

    for (let k = 0; k <= 104; k += 1) {
      evaluator.schedule(k);
      await vi.advanceTimersByTimeAsync(10);
    }
    await vi.advanceTimersByTimeAsync(EVALUATE_INTERVAL_MS * 2);

    const budget = Math.ceil(1050 / EVALUATE_INTERVAL_MS) + 1;
    expect(send.mock.calls.length).toBeLessThanOrEqual(budget);
    expect(send.mock.calls.length).toBeGreaterThanOrEqual(3);
    for (let i = 1; i < sendTimes.length; i += 1) {
      expect(sendTimes[i] - sendTimes[i - 1]).toBeGreaterThanOrEqual(EVALUATE_INTERVAL_MS);
    }
    expect(delivered[delivered.length - 1]).toBe(104);
  });

  it("discards a stale response that resolves after a newer one", async () => {
    const resolvers: ((value: string) => void)[] = [];
    const send = vi.fn(
      (arg: string) =>
        new Promise<string>((resolve) => {
          resolvers.push((value) => resolve(`${arg}:${value}`));
        }),
    );
    const delivered: string[] = [];
    const evaluator = new DebouncedEvaluator(send, (r) => delivered.push(r));

    evaluator.schedule("first");
    await vi.advanceTimersByTimeAsync(EVALUATE_INTERVAL_MS);
    evaluator.schedule("second");
    await vi.advanceTimersByTimeAsync(EVALUATE_INTERVAL_MS);
    expect(send).toHaveBeenCalledTimes(2);

    resolvers[1]("done");
    await flushMicrotasks();
    resolvers[0]("done");
    await flushMicrotasks();

    expect(delivered).toEqual(["second:done"]);
  });

  it("delivers in-order responses normally", async () => {
    const send = vi.fn(async (arg: string) => arg.toUpperCase());
    const delivered: string[] = [];
    const evaluator = new DebouncedEvaluator(send, (r) => delivered.push(r));

    evaluator.schedule("a");
    await vi.advanceTimersByTimeAsync(EVALUATE_INTERVAL_MS);
    await flushMicrotasks();
    evaluator.schedule("b");
    await vi.advanceTimersByTimeAsync(EVALUATE_INTERVAL_MS);
    await flushMicrotasks();

    expect(delivered).toEqual(["A", "B"]);
    expect(evaluator.requestCount).toBe(2);
  });

  it("cancel drops the pending edit without sending", async () => {
    const send = vi.fn(async (arg: number) => arg);
    const evaluator = new DebouncedEvaluator(send, () => undefined);

    evaluator.schedule(1);
    evaluator.cancel();
    await vi.advanceTimersByTimeAsync(EVALUATE_INTERVAL_MS * 2);

    expect(send).not.toHaveBeenCalled();
  });
});

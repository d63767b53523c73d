/** Monotonic request tokens: only the newest request may update the view. */

export class SupersessionGate {
  private latest = 0;

  next(): number {
    this.latest += 1;
    return this.latest;
  }

  isCurrent(token: number): boolean {
    return token === this.latest;
  }
}

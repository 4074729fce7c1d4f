/**
 * Client-side request serializer: at most one task in flight, later
 * tasks wait their turn. A failed task rejects its own caller but never
 * blocks the queue.
 */
export class RequestQueue {
    private tail: Promise<unknown> = Promise.resolve();
    private depth = 0;

    get pending(): number {
        return this.depth;
    }

    run<T>(task: () => Promise<T>): Promise<T> {
        this.depth += 1;
        const result = this.tail
            .then(task)
            .finally(() => { this.depth -= 1; });
        this.tail = result.catch(() => undefined);
        return result;
    }
}

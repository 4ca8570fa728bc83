public class GraphPaths {
    static boolean[][] buildGraph(int size) {
        int[][] edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5},
                         {2, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 6}, {4, 9}};
        boolean[][] adjacency = new boolean[size][size];
        for (int e = 0; e < edges.length; e++) {
            int a = edges[e][0];
            int b = edges[e][1];
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        return adjacency;
    }

    static int[] distancesFrom(boolean[][] adjacency, int start) {
        int size = adjacency.length;
        int[] distance = new int[size];
        for (int i = 0; i < size; i++) {
            distance[i] = -1;
        }
        int[] queue = new int[size];
        int head = 0;
        int tail = 0;
        distance[start] = 0;
        queue[tail] = start;
        tail = tail + 1;
        while (head < tail) {
            int node = queue[head];
            head = head + 1;
            for (int next = 0; next < size; next++) {
                if (adjacency[node][next] && distance[next] == -1) {
                    distance[next] = distance[node] + 1;
                    queue[tail] = next;
                    tail = tail + 1;
                }
            }
        }
        return distance;
    }

    // farthest reachable distance from the node
    static int eccentricity(boolean[][] adjacency, int node) {
        int[] spread = distancesFrom(adjacency, node);
        int worst = 0;
        for (int i = 0; i < spread.length; i++) {
            if (spread[i] > worst) {
                worst = spread[i];
            }
        }
        return worst;
    }

    static String render(int[] values) {
        StringBuilder text = new StringBuilder();
        for (int i = 0; i < values.length; i++) {
            if (i > 0) {
                text.append(",");
            }
            text.append(values[i]);
        }
        return text.toString();
    }

    public static void main(String[] args) {
        boolean[][] graph = buildGraph(10);
        for (int origin = 0; origin < 4; origin++) {
            System.out.println("dist" + origin + " " + render(distancesFrom(graph, origin)));
        }
        int[] radii = new int[10];
        int diameter = 0;
        for (int node = 0; node < 10; node++) {
            radii[node] = eccentricity(graph, node);
            if (radii[node] > diameter) {
                diameter = radii[node];
            }
        }
        System.out.println("ecc " + render(radii));
        System.out.println("diameter " + diameter);
    }
}

def build_graph():
    edges = [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5),
             (2, 6), (6, 7), (7, 8), (5, 8), (1, 6), (4, 9)]
    size = 10
    adjacency = [[] for _ in range(size)]
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    for neighbors in adjacency:
        neighbors.sort()
    return adjacency


def shortest_distances(adjacency, start):
    distance = [-1] * len(adjacency)
    distance[start] = 0
    frontier = [start]
    while len(frontier) > 0:
        next_frontier = []
        for node in frontier:
            for neighbor in adjacency[node]:
                if distance[neighbor] == -1:
                    distance[neighbor] = distance[node] + 1
                    next_frontier.append(neighbor)
        frontier = next_frontier
    return distance


def eccentricity(adjacency, node):
    # the farthest shortest-path distance from this node
    distances = shortest_distances(adjacency, node)
    worst = 0
    for value in distances:
        if value > worst:
            worst = value
    return worst


def degree_profile(adjacency):
    counts = []
    for neighbors in adjacency:
        counts.append(len(neighbors))
    return counts


graph = build_graph()
for origin in range(0, 4):
    row = shortest_distances(graph, origin)
    print("dist" + str(origin) + " " + ",".join(str(v) for v in row))
radii = []
for node in range(10):
    radii.append(eccentricity(graph, node))
print("ecc " + ",".join(str(v) for v in radii))
print("deg " + ",".join(str(v) for v in degree_profile(graph)))
print("diameter " + str(max(radii)))
edge_total = 0
for neighbors in graph:
    edge_total = edge_total + len(neighbors)
print("halfedges " + str(edge_total))
reach = shortest_distances(graph, 9)
far_nodes = []
for node in range(10):
    if reach[node] >= 3:
        far_nodes.append(str(node))
print("far9 " + ",".join(far_nodes))

class Node:
    def __init__(self, value, left=None, right=None):
        self.value = value
        self.left = left
        self.right = right


def insert(root, value):
    if root is None:
        return Node(value)
    if value < root.value:
        root.left = insert(root.left, value)
    elif value > root.value:
        root.right = insert(root.right, value)
    return root


def inorder(root):
    if root is not None:
        yield from inorder(root.left)
        yield root.value
        yield from inorder(root.right)


def height(root):
    if root is None:
        return 0
    return 1 + max(height(root.left), height(root.right))

/**
 * Authoring script for the todo diagram: the exact click-path a user
 * takes in the editor, expressed as edit actions, plus the document and
 * SDL lines the result must produce.
 */

import { addProperty, addVertex, drawEdge } from "../../src/model.js";
import { applyEdit, initialState, type EditorState } from "../../src/state.js";

export function authorTodoDiagram(): EditorState {
  let state = initialState();
  state = applyEdit(state, (d) => addVertex(d, "User").draft);
  state = applyEdit(state, (d) => addProperty(d, "vertex", "user", "name", "String", true));
  state = applyEdit(state, (d) => addProperty(d, "vertex", "user", "age", "Int", false));
  state = applyEdit(state, (d) => addVertex(d, "Todo").draft);
  state = applyEdit(state, (d) => addProperty(d, "vertex", "todo", "checked", "Boolean", true));
  state = applyEdit(state, (d) => drawEdge(d, "likes", "user", "user").draft);
  state = applyEdit(state, (d) => addProperty(d, "edge", "likes", "strength", "Float", true));
  state = applyEdit(state, (d) => drawEdge(d, "owns", "user", "todo").draft);
  return state;
}

export const TODO_DOCUMENT = {
  vertices: [
    {
      id: "user",
      label: "User",
      properties: [
        { key: "name", datatype: "String", required: true },
        { key: "age", datatype: "Int", required: false },
      ],
    },
    {
      id: "todo",
      label: "Todo",
      properties: [{ key: "checked", datatype: "Boolean", required: true }],
    },
  ],
  edges: [
    {
      id: "likes",
      label: "likes",
      source: "user",
      target: "user",
      properties: [{ key: "strength", datatype: "Float", required: true }],
    },
    {
      id: "owns",
      label: "owns",
      source: "user",
      target: "todo",
      properties: [],
    },
  ],
};

export const TODO_SDL_EXCERPTS = [
  "type Query {",
  "  user(id: ID!): UserVertex",
  "  userList(where: UserVertexLogicInput, orderBy: [UserVertexOrderByInput!], " +
    "pagination: PaginationInput): [UserVertex!]!",
  "type UserVertex implements GraphElement {",
  "  id: ID!",
  "  label: String!",
  "  name: String!",
  "  age: Int",
  "  likesOut(whereVertex: UserVertexLogicInput, orderByVertex: [UserVertexOrderByInput!], " +
    "whereEdge: UserToUserLikesEdgeLogicInput, orderByEdge: [UserToUserLikesEdgeOrderByInput!], " +
    "pagination: PaginationInput): [UserToUserLikesEdge!]!",
  "  likesIn(whereVertex: UserVertexLogicInput, orderByVertex: [UserVertexOrderByInput!], " +
    "whereEdge: UserToUserLikesEdgeLogicInput, orderByEdge: [UserToUserLikesEdgeOrderByInput!], " +
    "pagination: PaginationInput): [UserToUserLikesEdge!]!",
  "  ownsOut(whereVertex: TodoVertexLogicInput, orderByVertex: [TodoVertexOrderByInput!], " +
    "pagination: PaginationInput): [UserToTodoOwnsEdge!]!",
];

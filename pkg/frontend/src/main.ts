import { initApp } from './app.js';

const root = document.querySelector<HTMLDivElement>('#app');
if (!root) {
  throw new Error('missing #app container');
}
initApp(root);
